//! `starring`: generalized inverses and theorem sweeps over small
//! `*`-rings from the command line.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use starring::ginverse::{
    group_inverse, inner_inverse, is_ep, is_star_cancellable, moore_penrose, moore_penrose_oracle,
    one_four_inverse, one_three_inverse,
};
use starring::ring::{validate, DEFAULT_VALIDATION_BUDGET};
use starring::theorems::{t39_decomposition, Decomposition};
use starring::{
    classify, parse_element, verify_theorem, with_backend, AnyRing, Backend, Element, Error,
    RingDescriptor, SweepOptions,
};

const CAP_ENV: &str = "STARRING_CAP";

#[derive(Debug, Parser)]
#[command(name = "starring", version)]
#[command(about = "Exact Moore-Penrose and other generalized inverses in rings with involution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RingArgs {
    /// Ring descriptor as JSON, e.g. '{"kind":"ZMod","n":8}', or @path to a file.
    #[arg(long)]
    ring: String,

    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,

    /// Also write the output to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ElementArgs {
    #[command(flatten)]
    ring: RingArgs,

    /// Element as JSON: 5, [[1,0],[1,1]], [["1/2+i"]], or @path.
    #[arg(long)]
    element: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Kind {
    Inner,
    #[value(name = "13")]
    OneThree,
    #[value(name = "14")]
    OneFour,
    Group,
    Mp,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the ring and involution axioms.
    ValidateRing {
        #[command(flatten)]
        ring: RingArgs,

        /// Largest number of pairs to check; smaller rings are checked exhaustively.
        #[arg(long, default_value_t = DEFAULT_VALIDATION_BUDGET)]
        budget: u64,
    },

    /// Idempotent, projection, Hermitian, normal and invertibility flags.
    Classify(ElementArgs),

    /// The Moore-Penrose inverse with the equations that certify it.
    Mp {
        #[command(flatten)]
        element: ElementArgs,

        /// Cross-check against exhaustive search (finite rings only).
        #[arg(long)]
        oracle: bool,
    },

    /// Inner, {1,3}, {1,4}, group and Moore-Penrose inverses.
    Ginv {
        #[command(flatten)]
        element: ElementArgs,

        #[arg(long, value_enum, default_value = "all")]
        kind: Kind,
    },

    /// Sweep a finite ring and compare every condition of a theorem with
    /// Moore-Penrose existence.
    Verify {
        #[command(flatten)]
        ring: RingArgs,

        /// T3.1, T3.2, T3.3, T3.4, T3.5, C3.6, T3.8, T3.9, C3.10 or lemmas.
        #[arg(long)]
        theorem: String,

        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,

        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_m: u32,

        /// Also compare the library's a† with exhaustive search on every element.
        #[arg(long)]
        oracle: bool,

        /// Worker threads (default: one per core).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
    },

    /// Annihilator / principal ideal splittings of the ring for an element.
    Decompose {
        #[command(flatten)]
        element: ElementArgs,

        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
}

/// What a command produced: text and JSON renderings plus the exit status.
struct Output {
    text: String,
    json: Value,
    failed: bool,
}

fn read_arg(arg: &str) -> Result<String, Error> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn open_ring(arg: &str) -> Result<AnyRing, Error> {
    let text = read_arg(arg)?;
    let descriptor: RingDescriptor = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidDescriptor(format!("{e} in {}", text.trim())))?;
    let ring = AnyRing::new(descriptor)?;
    match std::env::var(CAP_ENV) {
        Ok(cap) => {
            let cap = cap.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{CAP_ENV} must be a positive integer, got {cap:?}"))
            })?;
            Ok(ring.with_cap(cap))
        }
        Err(_) => Ok(ring),
    }
}

fn open_element(args: &ElementArgs) -> Result<(AnyRing, Element), Error> {
    let ring = open_ring(&args.ring.ring)?;
    let element = parse_element(ring.descriptor(), &read_arg(&args.element)?)?;
    Ok((ring, element))
}

fn run(command: &Command) -> Result<Output, Error> {
    match command {
        Command::ValidateRing { ring, budget } => {
            let any = open_ring(&ring.ring)?;
            let report = with_backend!(&any, r => validate(r, *budget));
            Ok(Output {
                text: render::validation(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
                failed: !report.passed,
            })
        }
        Command::Classify(args) => {
            let (any, element) = open_element(args)?;
            with_backend!(&any, r => {
                let a = r.from_element(&element)?;
                let flags = classify(r, &a)?;
                Ok(Output {
                    text: render::flags(&element, &flags),
                    json: json!({"ring": any.descriptor(), "element": element.to_json(), "flags": flags}),
                    failed: false,
                })
            })
        }
        Command::Mp {
            element: args,
            oracle,
        } => {
            let (any, element) = open_element(args)?;
            with_backend!(&any, r => {
                let a = r.from_element(&element)?;
                let result = if *oracle { moore_penrose_oracle(r, &a)? } else { moore_penrose(r, &a)? };
                Ok(Output {
                    text: render::inverse(r, &element, &result),
                    json: render::inverse_json(r, &element, &result),
                    failed: false,
                })
            })
        }
        Command::Ginv {
            element: args,
            kind,
        } => {
            let (any, element) = open_element(args)?;
            with_backend!(&any, r => {
                let a = r.from_element(&element)?;
                let mut results = Vec::new();
                if matches!(kind, Kind::Inner | Kind::All) {
                    results.push(inner_inverse(r, &a)?);
                }
                if matches!(kind, Kind::OneThree | Kind::All) {
                    results.push(one_three_inverse(r, &a)?);
                }
                if matches!(kind, Kind::OneFour | Kind::All) {
                    results.push(one_four_inverse(r, &a)?);
                }
                if matches!(kind, Kind::Group | Kind::All) {
                    results.push(group_inverse(r, &a)?);
                }
                if matches!(kind, Kind::Mp | Kind::All) {
                    results.push(moore_penrose(r, &a)?);
                }
                let mut text: Vec<String> = results.iter().map(|res| render::inverse(r, &element, res)).collect();
                let mut json = json!({
                    "ring": any.descriptor(),
                    "element": element.to_json(),
                    "inverses": results.iter().map(|res| render::inverse_json(r, &element, res)).collect::<Vec<_>>(),
                });
                if *kind == Kind::All {
                    let ep = is_ep(r, &a)?;
                    let cancellable = is_star_cancellable(r, &a).ok();
                    text.push(format!("EP: {ep}"));
                    if let Some(c) = cancellable {
                        text.push(format!("*-cancellable: {c}"));
                    }
                    json["ep"] = json!(ep);
                    json["star_cancellable"] = json!(cancellable);
                }
                Ok(Output { text: text.join("\n"), json, failed: false })
            })
        }
        Command::Verify {
            ring,
            theorem,
            max_n,
            max_m,
            oracle,
            workers,
        } => {
            let any = open_ring(&ring.ring)?;
            let options = SweepOptions {
                n_max: *max_n,
                m_max: *max_m,
                workers: workers.map(|w| w as usize),
                oracle_crosscheck: *oracle,
            };
            let report = verify_theorem(&any, theorem, &options)?;
            Ok(Output {
                text: report.to_string(),
                json: serde_json::to_value(&report).expect("report serializes"),
                failed: !report.is_clean(),
            })
        }
        Command::Decompose {
            element: args,
            max_n,
        } => {
            let (any, element) = open_element(args)?;
            with_backend!(&any, r => {
                let a = r.from_element(&element)?;
                let mut checks = Vec::new();
                for n in 1..=*max_n {
                    for variant in Decomposition::ALL {
                        checks.push(t39_decomposition(r, &a, n, variant)?);
                    }
                }
                let exists = moore_penrose(r, &a)?.exists();
                Ok(Output {
                    text: render::decompositions(r, &element, &checks, exists),
                    json: render::decompositions_json(r, &element, &checks, exists),
                    failed: false,
                })
            })
        }
    }
}

fn options(command: &Command) -> &RingArgs {
    match command {
        Command::ValidateRing { ring, .. } | Command::Verify { ring, .. } => ring,
        Command::Classify(e)
        | Command::Mp { element: e, .. }
        | Command::Ginv { element: e, .. } => &e.ring,
        Command::Decompose { element: e, .. } => &e.ring,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = options(&cli.command);
    let output = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = if opts.json {
        serde_json::to_string_pretty(&output.json).expect("JSON output serializes")
    } else {
        output.text
    };
    println!("{rendered}");
    if let Some(path) = &opts.out {
        if let Err(e) = fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if output.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
