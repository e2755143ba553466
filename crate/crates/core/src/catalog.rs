//! Names of symmetric BT1 group schemes and the embedded tables for `g <= 4`.
//!
//! Names are written in ASCII as `L^2+I[2,1]`: `L` is the p-torsion of an
//! ordinary elliptic curve, `I[r,a]` an indecomposable piece of rank `p^{2r}`
//! with p-rank 0 and a-number `a`. The defined indecomposables are `I[r,1]`
//! (`r >= 1`), `I[r,2]` (`r >= 3`) and `I[4,3]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::dieudonne::{self, MonomialModule};
use crate::error::{Error, Result};
use crate::strata::{self, FinalType, YoungType};
use crate::taut::LambdaPoly;
use crate::weyl::WeylWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indecomposable {
    r: usize,
    a: usize,
}

impl Indecomposable {
    pub fn new(r: usize, a: usize) -> Result<Self> {
        let ok = match a {
            1 => r >= 1,
            2 => r >= 3,
            3 => r == 4,
            _ => false,
        };
        if ok {
            Ok(Self { r, a })
        } else {
            Err(Error::UndefinedFactor(format!(
                "I[{r},{a}] is not a defined indecomposable"
            )))
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn module(&self) -> MonomialModule {
        match self.a {
            1 => dieudonne::module_i_r_1(self.r),
            2 => dieudonne::module_i_r_2(self.r),
            _ => Ok(dieudonne::module_i_4_3()),
        }
        .expect("validated on construction")
    }
}

/// Largest `g` a name may describe; its module then has dimension 64.
pub const MAX_NAME_DIM: usize = crate::dieudonne::MAX_DIM / 2;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSchemeName {
    l_exponent: usize,
    /// Sorted by `(r, a)`.
    factors: Vec<Indecomposable>,
}

impl GroupSchemeName {
    pub fn new(l_exponent: usize, mut factors: Vec<Indecomposable>) -> Result<Self> {
        if l_exponent == 0 && factors.is_empty() {
            return Err(Error::InvalidDimension(0));
        }
        factors.sort();
        let g = factors
            .iter()
            .fold(l_exponent, |g, f| g.saturating_add(f.r));
        if g > MAX_NAME_DIM {
            return Err(Error::InvalidDimension(g as i64));
        }
        Ok(Self {
            l_exponent,
            factors,
        })
    }

    pub fn l_exponent(&self) -> usize {
        self.l_exponent
    }

    pub fn factors(&self) -> &[Indecomposable] {
        &self.factors
    }

    pub fn g(&self) -> usize {
        self.l_exponent + self.factors.iter().map(|f| f.r).sum::<usize>()
    }

    /// Factors with multiplicities, in canonical order.
    fn grouped(&self) -> Vec<(Indecomposable, usize)> {
        let mut out: Vec<(Indecomposable, usize)> = Vec::new();
        for &f in &self.factors {
            match out.last_mut() {
                Some((prev, n)) if *prev == f => *n += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    /// Paper-style rendering, e.g. `L² ⊕ I₁,₁² ⊕ I₂,₁`.
    pub fn unicode(&self) -> String {
        let mut parts = Vec::new();
        if self.l_exponent > 0 {
            parts.push(format!("L{}", sup(self.l_exponent)));
        }
        for (f, n) in self.grouped() {
            parts.push(format!("I{},{}{}", sub(f.r), sub(f.a), sup(n)));
        }
        parts.join(" ⊕ ")
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_name(text)
    }
}

fn sup(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if n == 1 {
        return String::new();
    }
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn sub(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// ASCII rendering, e.g. `L^2+I[1,1]^2+I[2,1]`.
impl fmt::Display for GroupSchemeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.l_exponent {
            0 => {}
            1 => parts.push("L".to_string()),
            n => parts.push(format!("L^{n}")),
        }
        for (fac, n) in self.grouped() {
            let exp = if n == 1 {
                String::new()
            } else {
                format!("^{n}")
            };
            parts.push(format!("I[{},{}]{exp}", fac.r, fac.a));
        }
        f.write_str(&parts.join("+"))
    }
}

/// Grammar: `name := term ("+" term)*`, `term := base ("^" posint)?`,
/// `base := "L" | "I[" posint "," posint "]"`. Whitespace is ignored.
pub fn parse_name(text: &str) -> Result<GroupSchemeName> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = NameParser {
        chars,
        i: 0,
        end: text.len(),
    };
    let mut l_exponent = 0;
    let mut factors = Vec::new();
    let mut g = 0usize;
    loop {
        let start = p.pos();
        let base = match p.next() {
            Some('L') => None,
            Some('I') => {
                p.expect('[')?;
                let r = p.posint()?;
                p.expect(',')?;
                let a = p.posint()?;
                p.expect(']')?;
                Some((r, a, start))
            }
            _ => return p.fail_at(start, "expected 'L' or 'I['"),
        };
        let mult = if p.peek() == Some('^') {
            p.next();
            p.posint()?
        } else {
            1
        };
        let r = base.map_or(1, |b| b.0);
        g = g.saturating_add(r.saturating_mul(mult));
        if g > MAX_NAME_DIM {
            return Err(Error::InvalidDimension(g.min(i64::MAX as usize) as i64));
        }
        match base {
            None => l_exponent += mult,
            Some((r, a, _)) => {
                let fac = Indecomposable::new(r, a)?;
                factors.extend(std::iter::repeat_n(fac, mult));
            }
        }
        match p.next() {
            None => break,
            Some('+') => continue,
            Some(_) => return p.fail_at(p.prev_pos(), "expected '+' or end of input"),
        }
    }
    GroupSchemeName::new(l_exponent, factors)
}

struct NameParser {
    chars: Vec<(usize, char)>,
    i: usize,
    end: usize,
}

impl NameParser {
    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.end, |c| c.0)
    }

    fn prev_pos(&self) -> usize {
        self.chars
            .get(self.i.saturating_sub(1))
            .map_or(self.end, |c| c.0)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|c| c.1)
    }

    fn next(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.i += 1;
        }
        c
    }

    fn fail_at<T>(&self, pos: usize, message: &str) -> Result<T> {
        Err(Error::Syntax {
            pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        let pos = self.pos();
        match self.next() {
            Some(c) if c == want => Ok(()),
            _ => self.fail_at(pos, &format!("expected '{want}'")),
        }
    }

    fn posint(&mut self) -> Result<usize> {
        let pos = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.i += 1;
        }
        match digits.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => self.fail_at(pos, "expected a positive integer"),
        }
    }
}

/// Direct sum of the factor modules: `L` copies first, then the
/// indecomposables in canonical order.
pub fn build_module(name: &GroupSchemeName) -> MonomialModule {
    let mut parts = vec![dieudonne::module_l(); name.l_exponent];
    parts.extend(name.factors.iter().map(Indecomposable::module));
    dieudonne::direct_sum(&parts).expect("a name has at least one factor")
}

/// `I[r,1] + I[g-r,1]` for `1 <= r <= g/2`.
pub fn decomposable_a2_list(g: usize) -> Result<Vec<GroupSchemeName>> {
    if g < 2 {
        return Err(Error::InvalidDimension(g as i64));
    }
    (1..=g / 2)
        .map(|r| {
            GroupSchemeName::new(
                0,
                vec![Indecomposable::new(r, 1)?, Indecomposable::new(g - r, 1)?],
            )
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenRow {
    pub g: usize,
    pub name: GroupSchemeName,
    pub codim: usize,
    pub f: usize,
    pub a: usize,
    pub nu: FinalType,
    pub mu: YoungType,
    pub word: WeylWord,
    /// Stored text of the reduced cycle class (rows with `g <= 3`).
    pub cycle_class_text: Option<String>,
    pub cycle_class: Option<LambdaPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Golden {
    rows: Vec<GoldenRow>,
    hasse_g4_edges: Vec<(YoungType, YoungType)>,
}

impl Eq for GoldenRow {}

#[derive(Deserialize)]
struct RawGolden {
    version: u32,
    rows: Vec<RawRow>,
    hasse_g4_edges: Vec<(Vec<u32>, Vec<u32>)>,
}

/// One record of the golden data file.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRow {
    g: usize,
    name: String,
    codim: usize,
    f: usize,
    a: usize,
    nu: Vec<u32>,
    mu: Vec<u32>,
    word: Vec<usize>,
    cycle_class: Option<String>,
}

pub const GOLDEN_JSON: &str = include_str!("../data/golden_tables.json");

impl Golden {
    /// Parses golden data and checks each row for internal consistency.
    pub fn load(json: &str) -> Result<Self> {
        let raw: RawGolden =
            serde_json::from_str(json).map_err(|e| Error::GoldenData(e.to_string()))?;
        if raw.version != 1 {
            return Err(Error::GoldenData(format!(
                "unsupported version {}",
                raw.version
            )));
        }
        let rows = raw
            .rows
            .into_iter()
            .map(Self::load_row)
            .collect::<Result<Vec<_>>>()?;
        let hasse_g4_edges = raw
            .hasse_g4_edges
            .into_iter()
            .map(|(a, b)| Ok((YoungType::new(4, a)?, YoungType::new(4, b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows,
            hasse_g4_edges,
        })
    }

    fn load_row(raw: RawRow) -> Result<GoldenRow> {
        let bad =
            |what: &str| Error::GoldenData(format!("row {} (g = {}): {what}", raw.name, raw.g));
        let name = parse_name(&raw.name)?;
        if name.g() != raw.g {
            return Err(bad("name has the wrong dimension"));
        }
        let nu = FinalType::new(raw.g, raw.nu.clone())?;
        let mu = YoungType::new(raw.g, raw.mu.clone())?;
        if strata::final_to_young(&nu) != mu {
            return Err(bad("nu and mu do not correspond"));
        }
        if raw.codim != strata::stratum_codim(&mu) {
            return Err(bad("codim differs from the size of mu"));
        }
        if (raw.f, raw.a) != strata::invariants_of_young(&mu) {
            return Err(bad("f or a disagrees with mu"));
        }
        if strata::stratum_dim(&nu) + raw.codim != raw.g * (raw.g + 1) / 2 {
            return Err(bad("dim + codim != g(g+1)/2"));
        }
        let word = WeylWord::new(raw.g, raw.word)?;
        let cycle_class = raw
            .cycle_class
            .as_deref()
            .map(|s| LambdaPoly::parse(raw.g, s))
            .transpose()?;
        Ok(GoldenRow {
            g: raw.g,
            name,
            codim: raw.codim,
            f: raw.f,
            a: raw.a,
            nu,
            mu,
            word,
            cycle_class_text: raw.cycle_class,
            cycle_class,
        })
    }

    pub fn rows(&self) -> &[GoldenRow] {
        &self.rows
    }

    pub fn table(&self, g: usize) -> Result<Vec<&GoldenRow>> {
        if !(1..=4).contains(&g) {
            return Err(Error::ClassificationUnavailable(g));
        }
        Ok(self.rows.iter().filter(|r| r.g == g).collect())
    }

    pub fn hasse_g4_edges(&self) -> &[(YoungType, YoungType)] {
        &self.hasse_g4_edges
    }

    /// Final type to name, for `g <= 4`.
    pub fn by_final_type(&self) -> BTreeMap<&FinalType, &GoldenRow> {
        self.rows.iter().map(|r| (&r.nu, r)).collect()
    }
}

/// The embedded golden tables.
pub fn golden() -> &'static Golden {
    static GOLDEN: OnceLock<Golden> = OnceLock::new();
    GOLDEN.get_or_init(|| Golden::load(GOLDEN_JSON).expect("embedded golden data is consistent"))
}

/// Rows of the table for dimension `g` (1..=4), in table order.
pub fn golden_table(g: usize) -> Result<Vec<&'static GoldenRow>> {
    golden().table(g)
}

/// The golden name carrying final type `nu`.
pub fn classify(nu: &FinalType) -> Result<GroupSchemeName> {
    if nu.g() > 4 {
        return Err(Error::ClassificationUnavailable(nu.g()));
    }
    golden()
        .rows
        .iter()
        .find(|r| &r.nu == nu)
        .map(|r| r.name.clone())
        .ok_or_else(|| Error::Unclassified(nu.nu().to_vec()))
}
