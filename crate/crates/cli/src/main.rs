mod args;
mod commands;
mod report;

use args::*;
use clap::error::ErrorKind;
use clap::Parser;
use report::{CliError, Outcome, EXIT_INPUT};
use std::time::Instant;

fn dispatch(cmd: &Cmd, out: &mut Outcome) -> Result<(), CliError> {
    match cmd {
        Cmd::Gcm(GcmCmd::Validate(a)) => commands::gcm_validate(a, out),
        Cmd::Tau(TauCmd::Compute(a)) => commands::tau_compute(a, out),
        Cmd::Tau(TauCmd::CheckRegular(a)) => commands::tau_check_regular(a, out),
        Cmd::Verify(VerifyCmd::Braid(a)) => commands::verify_braid(a, out),
        Cmd::Verify(VerifyCmd::VermaIdentity(a)) => commands::verify_verma_identity(a, out),
        Cmd::Verify(VerifyCmd::Hirota(a)) => commands::verify_hirota(a, out),
        Cmd::Verify(VerifyCmd::ReducedWord(a)) => commands::verify_reduced_word(a, out),
        Cmd::Verma(VermaCmd::Divide(a)) => commands::verma_divide(a, out),
        Cmd::Verma(VermaCmd::Crosscheck(a)) => commands::verma_crosscheck(a, out),
        Cmd::Okamoto(a) => commands::okamoto(a, out),
    }
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let start = Instant::now();
    let mut out = Outcome::default();
    let res = dispatch(&cli.cmd, &mut out).map(|_| out);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let report = report::build(argv[1..].to_vec(), res, ms);
    match cli.out {
        OutFormat::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        OutFormat::Text => print!("{}", report::render_text(&report)),
    }
    std::process::exit(report.exit_code);
}
