//! Command-line front end for `nsn-core`: file formats, commands, and exit
//! codes. The binary in `main.rs` only parses arguments and calls [`run_main`].

pub mod bench;
pub mod commands;
pub mod error;
pub mod input;

use std::io::Write;

use clap::Parser;

pub use commands::{run, Cli};
pub use error::{exit, CliError};

/// Parses `args`, runs the command, and returns the process exit code.
pub fn run_main<I, T>(args: I, out: &mut dyn Write, err_out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::SUCCESS };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err_out, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let format = cli.format;
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            commands::report_error(&e, format, out, err_out);
            e.exit_code()
        }
    }
}
