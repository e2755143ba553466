//! `eo-strata`: enumerate, describe and convert Ekedahl-Oort types, print the
//! reference tables and boundary diagrams, and check the tables against the
//! engine.

mod input;
mod record;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eo_core::catalog;
use eo_core::dieudonne;
use eo_core::poset;
use eo_core::strata::{self, FinalType};
use eo_core::verify;
use eo_core::weyl;

use record::Record;

/// Largest `g` for commands that list every type.
pub const MAX_G: usize = 12;

#[derive(Parser)]
#[command(
    name = "eo-strata",
    version,
    about = "Ekedahl-Oort types of principally polarized abelian varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Nu,
    Mu,
    Omega,
    Word,
    Name,
}

#[derive(Subcommand)]
enum Command {
    /// List all 2^g types of dimension G, ordered lexicographically by final type
    Enumerate {
        g: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show every invariant of one type
    ///
    /// INPUT is a name (`L^2+I[2,1]`), a final type (`nu=[0,1,1]`), a Young
    /// type (`mu={3,1}`), a Weyl element (`omega=<2,4,1,5,3,6>`) or a word
    /// (`word=s2*s3`, needs -g).
    Describe {
        input: String,
        #[arg(short = 'g')]
        g: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the Dieudonne module: basis and the actions of F and V
        #[arg(long)]
        show_module: bool,
        /// Print the canonical and dual filtrations and how nu is read off
        #[arg(long)]
        show_filtration: bool,
    },
    /// Translate one type between encodings
    ///
    /// Accepts the same inputs as `describe`. Each output line is itself a
    /// valid input.
    Convert {
        input: String,
        #[arg(short = 'g')]
        g: Option<usize>,
        /// Print only this encoding
        #[arg(long, value_enum)]
        to: Option<Target>,
    },
    /// The classification table for dimension G, ordered by codimension
    Table {
        g: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cover relations of the boundary order on Young types
    Hasse {
        g: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Add catalog names to node labels (g <= 4)
        #[arg(long)]
        names: bool,
    },
    /// Recompute the reference tables by independent routes and compare
    Verify {
        /// Print only failed checks and the summary
        #[arg(long)]
        quiet: bool,
    },
}

type CmdResult = Result<ExitCode, String>;

fn check_range(g: usize) -> Result<(), String> {
    if (1..=MAX_G).contains(&g) {
        Ok(())
    } else {
        Err(format!("g must be between 1 and {MAX_G}, got {g}"))
    }
}

fn listing(records: &[Record], format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(record::to_text(records)),
        Format::Csv => Ok(record::to_csv(records)),
        Format::Json => Ok(record::to_json(records)),
        Format::Dot => Err("dot output is only available for hasse".into()),
    }
}

fn enumerate(g: usize, format: Format) -> CmdResult {
    check_range(g)?;
    let records: Vec<Record> = strata::enumerate_final_types(g)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|t| Record::new(t, None))
        .collect();
    print!("{}", listing(&records, format)?);
    Ok(ExitCode::SUCCESS)
}

fn by_codim(g: usize) -> Result<Vec<FinalType>, String> {
    let mut types = strata::enumerate_final_types(g).map_err(|e| e.to_string())?;
    types.sort_by_cached_key(|t| {
        let mu = t.to_young();
        (mu.codim(), mu.parts().to_vec())
    });
    Ok(types)
}

fn table(g: usize, format: Format) -> CmdResult {
    check_range(g)?;
    let records: Vec<Record> = if g <= 4 {
        catalog::golden_table(g)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|row| Record::new(&row.nu, Some(&row.name)))
            .collect()
    } else {
        by_codim(g)?.iter().map(|t| Record::new(t, None)).collect()
    };
    print!("{}", listing(&records, format)?);
    Ok(ExitCode::SUCCESS)
}

fn notice_unnamed(resolved: &input::Resolved) {
    if resolved.name.is_none() {
        eprintln!(
            "note: no name for g = {}; names are catalogued for g <= 4",
            resolved.final_type.g()
        );
    }
}

fn describe(
    input: &str,
    g: Option<usize>,
    format: Format,
    show_module: bool,
    show_filtration: bool,
) -> CmdResult {
    let resolved = input::parse(input, g)?;
    let rec = Record::new(&resolved.final_type, resolved.name.as_ref());
    if format != Format::Text && (show_module || show_filtration) {
        return Err("--show-module and --show-filtration apply to text output".into());
    }
    match format {
        Format::Text => {}
        Format::Json => {
            notice_unnamed(&resolved);
            let mut out = serde_json::to_string_pretty(&rec).expect("record serializes");
            out.push('\n');
            print!("{out}");
            return Ok(ExitCode::SUCCESS);
        }
        Format::Csv => {
            notice_unnamed(&resolved);
            print!("{}", record::to_csv(&[rec]));
            return Ok(ExitCode::SUCCESS);
        }
        Format::Dot => return Err("dot output is only available for hasse".into()),
    }
    notice_unnamed(&resolved);
    print!("{}", record::describe_text(&rec, resolved.name.as_ref()));
    if show_module || show_filtration {
        let module = match &resolved.name {
            Some(name) => catalog::build_module(name),
            None => dieudonne::standard_module(&resolved.final_type).map_err(|e| e.to_string())?,
        };
        if show_module {
            let heading = match &resolved.name {
                Some(name) => format!("Dieudonne module of {name}"),
                None => format!(
                    "standard Dieudonne module of final type {}",
                    resolved.final_type
                ),
            };
            print!("\n{heading}, {}", module.pretty());
        }
        if show_filtration {
            let report = module.canonical_filtration().map_err(|e| e.to_string())?;
            print!("\n{}", report.render(&module));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn convert(input: &str, g: Option<usize>, to: Option<Target>) -> CmdResult {
    let resolved = input::parse(input, g)?;
    let nu = &resolved.final_type;
    let mu = nu.to_young();
    let omega = weyl::from_young(&mu);
    let word = Record::new(nu, None).omega_word;
    let word = weyl::WeylWord::new(nu.g(), word).map_err(|e| e.to_string())?;
    let lines = [
        (Target::Nu, Some(format!("nu={nu}"))),
        (Target::Mu, Some(format!("mu={mu}"))),
        (Target::Omega, Some(format!("omega={omega}"))),
        (Target::Word, Some(format!("word={word}"))),
        (Target::Name, resolved.name.as_ref().map(|n| n.to_string())),
    ];
    for (target, line) in lines {
        if to.is_some_and(|t| t != target) {
            continue;
        }
        match line {
            Some(line) => println!("{line}"),
            None => notice_unnamed(&resolved),
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct HasseJson {
    g: usize,
    nodes: Vec<Vec<u32>>,
    edges: Vec<[Vec<u32>; 2]>,
}

fn hasse(g: usize, format: Format, names: bool) -> CmdResult {
    check_range(g)?;
    let h = poset::hasse(g).map_err(|e| e.to_string())?;
    let out = match format {
        Format::Dot => h.to_dot(names),
        Format::Text => {
            let mut s = format!("{} nodes, {} edges\n", h.nodes.len(), h.edges.len());
            for (a, b) in &h.edges {
                s.push_str(&format!("{a} -> {b}\n"));
            }
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(["lower", "upper"]).expect("in-memory write");
            for (a, b) in &h.edges {
                w.write_record([a.to_string(), b.to_string()])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
        }
        Format::Json => {
            let doc = HasseJson {
                g,
                nodes: h.nodes.iter().map(|m| m.parts().to_vec()).collect(),
                edges: h
                    .edges
                    .iter()
                    .map(|(a, b)| [a.parts().to_vec(), b.parts().to_vec()])
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("diagram serializes") + "\n"
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn verify(quiet: bool) -> CmdResult {
    let report = verify::run();
    if quiet {
        for c in report.failures() {
            println!("FAIL {}: {}", c.name, c.detail);
        }
        let failed = report.failures().count();
        println!(
            "{} checks, {} passed, {} failed",
            report.checks.len(),
            report.checks.len() - failed,
            failed
        );
    } else {
        print!("{report}");
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { g, format } => enumerate(g, format),
        Command::Describe {
            input,
            g,
            format,
            show_module,
            show_filtration,
        } => describe(&input, g, format, show_module, show_filtration),
        Command::Convert { input, g, to } => convert(&input, g, to),
        Command::Table { g, format } => table(g, format),
        Command::Hasse { g, format, names } => hasse(g, format, names),
        Command::Verify { quiet } => verify(quiet),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
