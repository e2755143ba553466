//! Containment order on Young types, its Hasse diagram, and the comparison
//! with Bruhat order on the corresponding Weyl group elements.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::catalog;
use crate::error::{Error, Result};
use crate::strata::{self, YoungType};
use crate::weyl;

/// `a_j <= b_j` for every row `j`, missing parts read as zero.
pub fn young_leq(a: &YoungType, b: &YoungType) -> Result<bool> {
    if a.g() != b.g() {
        return Err(Error::DimensionMismatch(a.g(), b.g()));
    }
    Ok(a.parts().len() <= b.parts().len() && a.parts().iter().zip(b.parts()).all(|(x, y)| x <= y))
}

fn leq(a: &YoungType, b: &YoungType) -> bool {
    young_leq(a, b).expect("same g")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub g: usize,
    /// Ordered by codimension, then by parts.
    pub nodes: Vec<YoungType>,
    /// `(lower, upper)` cover pairs, sorted by node position.
    pub edges: Vec<(YoungType, YoungType)>,
}

/// All Young types of dimension `g`, ordered by codimension and then by parts.
fn young_types(g: usize) -> Result<Vec<YoungType>> {
    let mut nodes: Vec<YoungType> = strata::enumerate_final_types(g)?
        .iter()
        .map(strata::final_to_young)
        .collect();
    nodes.sort_by(|a, b| (a.codim(), a.parts()).cmp(&(b.codim(), b.parts())));
    Ok(nodes)
}

/// Covers of the containment order, by transitive reduction over bitsets of
/// strict upper sets.
pub fn hasse(g: usize) -> Result<HasseDiagram> {
    let nodes = young_types(g)?;
    let n = nodes.len();
    let words = n.div_ceil(64);
    let mut above = vec![vec![0u64; words]; n];
    let mut below = vec![vec![0u64; words]; n];
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            if i != j && leq(a, b) {
                above[i][j / 64] |= 1 << (j % 64);
                below[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if above[i][j / 64] & (1 << (j % 64)) == 0 {
                continue;
            }
            let between = above[i].iter().zip(&below[j]).any(|(x, y)| x & y != 0);
            if !between {
                edges.push((nodes[i].clone(), nodes[j].clone()));
            }
        }
    }
    Ok(HasseDiagram { g, nodes, edges })
}

impl HasseDiagram {
    pub fn edge_set(&self) -> BTreeSet<(YoungType, YoungType)> {
        self.edges.iter().cloned().collect()
    }

    /// Graphviz rendering. Node ids are the `{4,3,1}` strings; labels add the
    /// catalog name when `with_names` is set and `g <= 4`.
    pub fn to_dot(&self, with_names: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph eo_strata_g{} {{", self.g);
        let _ = writeln!(out, "  rankdir=LR;");
        for mu in &self.nodes {
            let mut label = mu.pretty();
            if with_names {
                if let Ok(name) = catalog::classify(&mu.to_final()) {
                    label = format!("{label}\\n{}", name.unicode());
                }
            }
            let _ = writeln!(out, "  \"{mu}\" [label=\"{label}\"];");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
        }
        out.push_str("}\n");
        out
    }
}

/// Whether containment of Young types is the reverse of Bruhat order on their
/// Weyl elements, over all pairs.
pub fn orders_match(g: usize) -> Result<bool> {
    let nodes = young_types(g)?;
    let omegas: Vec<_> = nodes.iter().map(weyl::from_young).collect();
    for (a, wa) in nodes.iter().zip(&omegas) {
        for (b, wb) in nodes.iter().zip(&omegas) {
            if leq(a, b) != weyl::bruhat_leq(wb, wa)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
