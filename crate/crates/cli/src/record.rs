//! One output row per stratum, and its text, CSV and JSON renderings.

use serde::{Deserialize, Serialize};

use eo_core::catalog::{self, GroupSchemeName};
use eo_core::strata::FinalType;
use eo_core::taut::{self, Style};
use eo_core::weyl::{self, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub g: usize,
    pub name: Option<String>,
    pub codim: usize,
    pub f: usize,
    pub a: usize,
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
    pub omega_oneline: Vec<usize>,
    pub omega_word: Vec<usize>,
    pub dim: usize,
    pub cycle_class: Option<String>,
}

impl Record {
    /// Words and class strings come from the reference tables when the type
    /// is listed there. Otherwise the word is the greedy reduced word, and the
    /// class is filled in only for `a <= 1`, where it is the p-rank class.
    pub fn new(nu: &FinalType, name: Option<&GroupSchemeName>) -> Self {
        let g = nu.g();
        let row = if g <= 4 {
            catalog::golden().rows().iter().find(|r| &r.nu == nu)
        } else {
            None
        };
        let mu = nu.to_young();
        let omega = weyl::from_young(&mu);
        let word = match row {
            Some(r) => r.word.clone(),
            None => weyl::reduced_word(&omega),
        };
        let (f, a) = (nu.p_rank(), nu.a_number());
        let cycle_class = row
            .and_then(|r| r.cycle_class_text.clone())
            .or_else(|| (a <= 1).then(|| taut::prank_class_factored(g, f, Style::Machine).ok())?);
        let name = name.cloned().or_else(|| row.map(|r| r.name.clone()));
        Record {
            g,
            name: name.map(|n| n.to_string()),
            codim: mu.codim(),
            f,
            a,
            nu: nu.nu().to_vec(),
            mu: mu.parts().to_vec(),
            omega_oneline: omega.oneline().to_vec(),
            omega_word: word.letters().to_vec(),
            dim: nu.dim(),
            cycle_class,
        }
    }

    fn word(&self) -> String {
        WeylWord::new(self.g, self.omega_word.clone())
            .map(|w| w.to_string())
            .unwrap_or_default()
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(T::to_string).collect();
    format!("[{}]", items.join(","))
}

fn young(v: &[u32]) -> String {
    let items: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn oneline(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("<{}>", items.join(","))
}

const HEADER: [&str; 11] = [
    "g",
    "name",
    "codim",
    "f",
    "a",
    "nu",
    "mu",
    "omega_oneline",
    "omega_word",
    "dim",
    "cycle_class",
];

pub fn to_json(records: &[Record]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("records serialize");
    out.push('\n');
    out
}

/// List-valued cells are written as JSON arrays.
pub fn to_csv(records: &[Record]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.g.to_string(),
            r.name.clone().unwrap_or_default(),
            r.codim.to_string(),
            r.f.to_string(),
            r.a.to_string(),
            list(&r.nu),
            list(&r.mu),
            list(&r.omega_oneline),
            list(&r.omega_word),
            r.dim.to_string(),
            r.cycle_class.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

/// Space-aligned columns with a header line.
pub fn to_text(records: &[Record]) -> String {
    let header = [
        "nu", "mu", "f", "a", "dim", "codim", "omega", "word", "name", "class",
    ];
    let rows: Vec<[String; 10]> = records
        .iter()
        .map(|r| {
            [
                list(&r.nu),
                young(&r.mu),
                r.f.to_string(),
                r.a.to_string(),
                r.dim.to_string(),
                r.codim.to_string(),
                oneline(&r.omega_oneline),
                r.word(),
                r.name.clone().unwrap_or_else(|| "-".into()),
                r.cycle_class.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (cell, w) in cells.iter().zip(widths) {
            s.push_str(cell);
            s.extend(std::iter::repeat_n(' ', w + 2 - cell.chars().count()));
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// One aligned `key value` line per field.
pub fn describe_text(r: &Record, name: Option<&GroupSchemeName>) -> String {
    let name_line = match name {
        Some(n) => format!("{n}  ({})", n.unicode()),
        None => "-".into(),
    };
    let fields = [
        ("name", name_line),
        ("g", r.g.to_string()),
        ("final type", list(&r.nu)),
        ("Young type", young(&r.mu)),
        ("p-rank", r.f.to_string()),
        ("a-number", r.a.to_string()),
        ("dimension", r.dim.to_string()),
        ("codimension", r.codim.to_string()),
        ("omega", oneline(&r.omega_oneline)),
        ("word", r.word()),
        (
            "cycle class",
            r.cycle_class.clone().unwrap_or_else(|| "-".into()),
        ),
    ];
    fields
        .iter()
        .map(|(k, v)| format!("{k:<12} {v}\n"))
        .collect()
}
