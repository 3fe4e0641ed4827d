use clap::Parser;

use fraclogistic::cli::{main_with_args, Args};

fn main() {
    let args = Args::parse();
    std::process::exit(main_with_args(args));
}
