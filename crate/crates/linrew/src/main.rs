use clap::Parser;
use linrew::cli::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version go to stdout with success; usage errors are
            // operational failures, not verdicts.
            let code = if err.use_stderr() { 3 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let json = cli.command.common().json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                for line in &report.human {
                    println!("{line}");
                }
            }
            std::process::exit(report.verdict.exit_code());
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(3);
        }
    }
}
