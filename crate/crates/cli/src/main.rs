use std::io::Write;
use std::process::ExitCode;

use basesize_cli::commands::{
    cmd_basesize_subsets, cmd_bounds, cmd_orbits, cmd_partitions_action, cmd_verify, cmd_wreath, BoundsArgs,
    OrbitsArgs, PartitionsArgs, SubsetsArgs, VerifyArgs, WreathArgs,
};
use basesize_cli::exit_code;
use clap::{Parser, Subcommand};

/// Base sizes and regular-orbit counts of permutation groups from character inner products.
#[derive(Debug, Parser)]
#[command(name = "basesize", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Base size of S_n acting on k-subsets.
    BasesizeSubsets(SubsetsArgs),
    /// Regular orbits, o(l) and o_K(l) of S_n on l-tuples of k-subsets.
    Orbits(OrbitsArgs),
    /// Base size of S_{n,k} wr P in product action.
    Wreath(WreathArgs),
    /// Lower and upper base-size bounds for large-base groups.
    Bounds(BoundsArgs),
    /// Sign inner products for S_n on partitions into r blocks of size s.
    PartitionsAction(PartitionsArgs),
    /// Brute-force checks on an explicit group spec.
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::BasesizeSubsets(a) => cmd_basesize_subsets(a),
        Command::Orbits(a) => cmd_orbits(a),
        Command::Wreath(a) => cmd_wreath(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::PartitionsAction(a) => cmd_partitions_action(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(doc) => {
            let text = serde_json::to_string_pretty(&doc.to_json()).expect("json");
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("basesize: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
