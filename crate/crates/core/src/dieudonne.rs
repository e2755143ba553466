//! Finite modules over `E = k[F, V]` with `FV = VF = 0`, in a signed monomial
//! model: `F` and `V` send each basis vector to plus or minus another basis
//! vector, or to zero.
//!
//! Semilinearity only twists scalars, so it never changes the dimension of an
//! image, preimage or intersection of coordinate subspaces. Every subspace the
//! engine touches is spanned by a subset of the basis and is stored as a bitmask.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::strata::FinalType;

/// Largest supported vector-space dimension (`2g`).
pub const MAX_DIM: usize = 64;

/// The image of one basis vector under `F` or `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Image {
    pub target: usize,
    pub negative: bool,
}

impl Image {
    pub fn pos(target: usize) -> Option<Self> {
        Some(Self {
            target,
            negative: false,
        })
    }

    pub fn neg(target: usize) -> Option<Self> {
        Some(Self {
            target,
            negative: true,
        })
    }
}

/// A coordinate subspace: the span of a set of basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    bits: u64,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self { n, bits: 0 }
    }

    pub fn whole(n: usize) -> Self {
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { n, bits }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::zero(n);
        for i in indices {
            assert!(i < n, "basis index {i} out of range");
            s.bits |= 1 << i;
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.bits & (1 << i) != 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&i| self.contains(i))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        Subspace {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    fn with(&self, i: usize) -> Subspace {
        Subspace {
            n: self.n,
            bits: self.bits | (1 << i),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialModule {
    g: usize,
    labels: Vec<String>,
    f: Vec<Option<Image>>,
    v: Vec<Option<Image>>,
}

fn check_action(name: &str, n: usize, action: &[Option<Image>]) -> Result<()> {
    if action.len() != n {
        return Err(Error::InvalidModule(format!(
            "{name} action has {} entries for {n} basis vectors",
            action.len()
        )));
    }
    let mut hit = vec![false; n];
    for img in action.iter().flatten() {
        if img.target >= n {
            return Err(Error::InvalidModule(format!(
                "{name} sends a basis vector out of range ({})",
                img.target
            )));
        }
        // two basis vectors with the same image would put a non-coordinate
        // vector in the kernel
        if hit[img.target] {
            return Err(Error::InvalidModule(format!(
                "{name} is not injective off its kernel (target {})",
                img.target
            )));
        }
        hit[img.target] = true;
    }
    Ok(())
}

impl MonomialModule {
    /// Checks `n = 2g`, that both actions are injective away from their kernels,
    /// and `FV = VF = 0`.
    pub fn new(
        g: usize,
        labels: Vec<String>,
        f: Vec<Option<Image>>,
        v: Vec<Option<Image>>,
    ) -> Result<Self> {
        let n = labels.len();
        if g == 0 || n != 2 * g {
            return Err(Error::InvalidModule(format!(
                "dimension {n} is not 2g for g = {g}"
            )));
        }
        if n > MAX_DIM {
            return Err(Error::InvalidModule(format!(
                "dimension {n} exceeds the supported maximum {MAX_DIM}"
            )));
        }
        check_action("F", n, &f)?;
        check_action("V", n, &v)?;
        for i in 0..n {
            if let Some(img) = v[i] {
                if f[img.target].is_some() {
                    return Err(Error::InvalidModule(format!(
                        "FV != 0 on basis vector {}",
                        labels[i]
                    )));
                }
            }
            if let Some(img) = f[i] {
                if v[img.target].is_some() {
                    return Err(Error::InvalidModule(format!(
                        "VF != 0 on basis vector {}",
                        labels[i]
                    )));
                }
            }
        }
        Ok(Self { g, labels, f, v })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn f_action(&self) -> &[Option<Image>] {
        &self.f
    }

    pub fn v_action(&self) -> &[Option<Image>] {
        &self.v
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::whole(self.dim())
    }

    fn image(action: &[Option<Image>], s: &Subspace) -> Subspace {
        Subspace::from_indices(s.n, s.indices().filter_map(|i| action[i].map(|m| m.target)))
    }

    fn preimage(action: &[Option<Image>], s: &Subspace) -> Subspace {
        Subspace::from_indices(
            s.n,
            (0..s.n).filter(|&i| action[i].is_none_or(|m| s.contains(m.target))),
        )
    }

    pub fn apply_v(&self, s: &Subspace) -> Subspace {
        Self::image(&self.v, s)
    }

    pub fn apply_f(&self, s: &Subspace) -> Subspace {
        Self::image(&self.f, s)
    }

    pub fn preimage_f(&self, s: &Subspace) -> Subspace {
        Self::preimage(&self.f, s)
    }

    pub fn preimage_v(&self, s: &Subspace) -> Subspace {
        Self::preimage(&self.v, s)
    }

    pub fn kernel_f(&self) -> Subspace {
        self.preimage_f(&self.zero())
    }

    pub fn kernel_v(&self) -> Subspace {
        self.preimage_v(&self.zero())
    }

    /// Stable image of `V`, the intersection of all `V^n D`.
    pub fn stable_v_image(&self) -> Subspace {
        let mut s = self.whole();
        for _ in 0..=self.dim() {
            let next = self.apply_v(&s);
            if next == s {
                break;
            }
            s = next;
        }
        s
    }

    pub fn p_rank(&self) -> usize {
        self.stable_v_image().dim()
    }

    /// `g - dim V^2 D`.
    pub fn a_number(&self) -> usize {
        let v2 = self.apply_v(&self.apply_v(&self.whole()));
        self.g.saturating_sub(v2.dim())
    }

    /// Smallest set of subspaces containing `seeds` and closed under both
    /// operations, sorted by dimension. Fails unless it is a chain.
    fn close_chain(
        &self,
        seeds: impl IntoIterator<Item = Subspace>,
        forward: fn(&Self, &Subspace) -> Subspace,
        backward: fn(&Self, &Subspace) -> Subspace,
    ) -> Result<Vec<Subspace>> {
        let mut found: BTreeSet<Subspace> = BTreeSet::new();
        let mut work: Vec<Subspace> = seeds.into_iter().collect();
        while let Some(s) = work.pop() {
            if !found.insert(s) {
                continue;
            }
            for next in [forward(self, &s), backward(self, &s)] {
                if !found.contains(&next) {
                    work.push(next);
                }
            }
        }
        let mut chain: Vec<Subspace> = found.into_iter().collect();
        chain.sort_by_key(|s| (s.dim(), s.bits));
        if chain
            .windows(2)
            .all(|w| w[0].dim() < w[1].dim() && w[0].is_subspace_of(&w[1]))
        {
            Ok(chain)
        } else {
            Err(Error::NotTotallyOrdered)
        }
    }

    /// Pieces obtained from `{0, D}` by closing under `V` and `F^{-1}`.
    pub fn canonical_pieces(&self) -> Result<Vec<Subspace>> {
        self.close_chain([self.zero(), self.whole()], Self::apply_v, Self::preimage_f)
    }

    /// Pieces obtained from `{0, D}` by closing under `F` and `V^{-1}`.
    pub fn dual_pieces(&self) -> Result<Vec<Subspace>> {
        self.close_chain([self.zero(), self.whole()], Self::apply_f, Self::preimage_v)
    }

    /// Refines a chain stable under `V` and `F^{-1}` to a full flag with the same
    /// stability, inserting coordinate subspaces one gap at a time with
    /// backtracking. Basis vectors are tried in index order.
    fn refine(&self, chain: Vec<Subspace>) -> Option<Vec<Subspace>> {
        let gap = chain.windows(2).position(|w| w[1].dim() > w[0].dim() + 1);
        let Some(k) = gap else {
            return Some(chain);
        };
        let (lo, hi) = (chain[k], chain[k + 1]);
        for e in hi.indices().filter(|&e| !lo.contains(e)) {
            let mut seeds = chain.clone();
            seeds.push(lo.with(e));
            if let Ok(closed) = self.close_chain(seeds, Self::apply_v, Self::preimage_f) {
                if let Some(full) = self.refine(closed) {
                    return Some(full);
                }
            }
        }
        None
    }

    pub fn canonical_filtration(&self) -> Result<FiltrationReport> {
        let pieces = self.canonical_pieces()?;
        let canonical: Vec<CanonicalPiece> = pieces
            .iter()
            .map(|s| CanonicalPiece {
                space: *s,
                dim: s.dim(),
                v_dim: self.apply_v(s).dim(),
            })
            .collect();
        let final_type = interpolate(self.g, &canonical)?;

        let flag = self.refine(pieces).ok_or(Error::NoFinalRefinement)?;
        let dual = self.dual_pieces()?;
        let dual_g = *dual.iter().find(|s| s.dim() == self.g).ok_or_else(|| {
            Error::InvalidModule("dual filtration has no piece of dimension g".into())
        })?;
        let interaction = (1..=self.g)
            .map(|i| flag[i].intersect(&dual_g).dim())
            .collect();

        Ok(FiltrationReport {
            canonical,
            final_type,
            final_flag: flag,
            dual,
            interaction,
        })
    }

    pub fn final_type(&self) -> Result<FinalType> {
        Ok(self.canonical_filtration()?.final_type)
    }

    pub fn label_of(&self, s: &Subspace) -> String {
        let parts: Vec<&str> = s.indices().map(|i| self.labels[i].as_str()).collect();
        format!("<{}>", parts.join(", "))
    }

    /// Basis labels and action table.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dimension {} (g = {})", self.dim(), self.g);
        let render = |img: Option<Image>| match img {
            None => "0".to_string(),
            Some(m) => format!(
                "{}{}",
                if m.negative { "-" } else { "" },
                self.labels[m.target]
            ),
        };
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {label:<10} F -> {:<10} V -> {}",
                render(self.f[i]),
                render(self.v[i])
            );
        }
        out
    }
}

fn interpolate(g: usize, pieces: &[CanonicalPiece]) -> Result<FinalType> {
    let mut nu = Vec::with_capacity(g);
    for i in 1..=g {
        let j = pieces
            .windows(2)
            .position(|w| w[0].dim <= i && i <= w[1].dim)
            .expect("canonical pieces span 0..=2g");
        let (lo, hi) = (&pieces[j], &pieces[j + 1]);
        let (dd, dv) = (hi.dim - lo.dim, hi.v_dim - lo.v_dim);
        let value = if dv == 0 {
            lo.v_dim
        } else if dv == dd {
            lo.v_dim + (i - lo.dim)
        } else {
            return Err(Error::InvalidModule(format!(
                "V has slope {dv}/{dd} between canonical pieces of dimension {} and {}",
                lo.dim, hi.dim
            )));
        };
        nu.push(value as u32);
    }
    FinalType::new(g, nu)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPiece {
    pub space: Subspace,
    pub dim: usize,
    /// `dim V(space)`.
    pub v_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub canonical: Vec<CanonicalPiece>,
    pub final_type: FinalType,
    /// A full flag `N_0 ⊂ ... ⊂ N_2g` refining the canonical pieces, stable
    /// under `V` and `F^{-1}`.
    pub final_flag: Vec<Subspace>,
    pub dual: Vec<Subspace>,
    /// `dim(N_i ∩ N'_g)` for `i = 1..=g`.
    pub interaction: Vec<usize>,
}

impl FiltrationReport {
    pub fn render(&self, module: &MonomialModule) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "canonical filtration (closure under V and F^-1):");
        for p in &self.canonical {
            let _ = writeln!(
                out,
                "  N_{:<3} dim V(N) = {:<3} {}",
                p.dim,
                p.v_dim,
                module.label_of(&p.space)
            );
        }
        let _ = writeln!(out, "final flag refining it, nu_i = dim V(N_i):");
        for (i, n) in self.final_flag.iter().enumerate().skip(1).take(module.g()) {
            let _ = writeln!(
                out,
                "  i = {i:<3} nu_i = {:<3} N_i = {}",
                self.final_type.at(i),
                module.label_of(n)
            );
        }
        let _ = writeln!(out, "final type nu = {}", self.final_type);
        let _ = writeln!(out, "dual filtration (closure under F and V^-1):");
        for s in &self.dual {
            let _ = writeln!(out, "  N'_{:<3} {}", s.dim(), module.label_of(s));
        }
        let _ = writeln!(out, "dim(N_i ∩ N'_g):");
        for (i, d) in self.interaction.iter().enumerate() {
            let _ = writeln!(out, "  i = {:<3} {}", i + 1, d);
        }
        out
    }
}

impl fmt::Display for MonomialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// `E/(F, 1-V) ⊕ E/(V, 1-F)`: the module of `Z/p ⊕ mu_p`.
pub fn module_l() -> MonomialModule {
    MonomialModule::new(
        1,
        vec!["x".into(), "y".into()],
        vec![None, Image::pos(1)],
        vec![Image::pos(0), None],
    )
    .expect("L is well formed")
}

/// `E/(F^r + V^r)` with basis `F, ..., F^r, 1, V, ..., V^{r-1}`.
pub fn module_i_r_1(r: usize) -> Result<MonomialModule> {
    if r == 0 {
        return Err(Error::InvalidModule("I[r,1] needs r >= 1".into()));
    }
    // indices: F^k at k-1 (k = 1..=r), V^k at r+k (k = 0..r-1)
    let fpow = |k: usize| k - 1;
    let vpow = |k: usize| r + k;
    let mut labels: Vec<String> = (1..=r).map(|k| format!("F^{k}")).collect();
    labels.push("1".into());
    labels.extend((1..r).map(|k| format!("V^{k}")));

    let mut f = vec![None; 2 * r];
    let mut v = vec![None; 2 * r];
    for k in 1..r {
        f[fpow(k)] = Image::pos(fpow(k + 1));
    }
    f[vpow(0)] = Image::pos(fpow(1));
    for k in 0..r {
        v[vpow(k)] = if k + 1 < r {
            Image::pos(vpow(k + 1))
        } else {
            Image::neg(fpow(r))
        };
    }
    MonomialModule::new(r, labels, f, v)
}

/// `E/(F^{r-1} - V) ⊕ E/(V^{r-1} - F)`.
pub fn module_i_r_2(r: usize) -> Result<MonomialModule> {
    if r < 3 {
        return Err(Error::InvalidModule("I[r,2] needs r >= 3".into()));
    }
    // first factor: F^k at k (k = 0..r-1); second: V^k at r+k
    let mut labels: Vec<String> = (0..r)
        .map(|k| format!("a:{}", power_label("F", k)))
        .collect();
    labels.extend((0..r).map(|k| format!("b:{}", power_label("V", k))));
    let mut f = vec![None; 2 * r];
    let mut v = vec![None; 2 * r];
    for k in 0..r - 1 {
        f[k] = Image::pos(k + 1);
        v[r + k] = Image::pos(r + k + 1);
    }
    v[0] = Image::pos(r - 1);
    f[r] = Image::pos(2 * r - 1);
    MonomialModule::new(r, labels, f, v)
}

/// The indecomposable of dimension 4 with a-number 3: generators `x, y, z`
/// tied together by `F^2 x = V y`, `F y = V^2 z` and `F z = V x`, one relation
/// of each shape `F^2 - V`, `V^2 - F`, `F - V`.
///
/// Taken as an honest direct sum, the three cyclic factors would be
/// `I[1,1] + I[3,2]` with final type `[0,1,1,1]`.
pub fn module_i_4_3() -> MonomialModule {
    let labels = ["x", "Fx", "F^2x=Vy", "Vx=Fz", "y", "Fy=V^2z", "z", "Vz"]
        .map(String::from)
        .to_vec();
    let (x, fx, f2x, vx, y, fy, z, vz) = (0, 1, 2, 3, 4, 5, 6, 7);
    let mut f = vec![None; 8];
    let mut v = vec![None; 8];
    f[x] = Image::pos(fx);
    f[fx] = Image::pos(f2x);
    v[x] = Image::pos(vx);
    v[y] = Image::pos(f2x);
    f[y] = Image::pos(fy);
    v[z] = Image::pos(vz);
    v[vz] = Image::pos(fy);
    f[z] = Image::pos(vx);
    MonomialModule::new(4, labels, f, v).expect("I[4,3] is well formed")
}

/// The standard module of a final type: basis `Z_1..Z_2g` with `N_i` spanned by
/// the first `i` vectors. With `nu` extended to `1..=2g` by
/// `nu(2g - i) = nu(i) + g - i`, `V Z_i = Z_{nu(i)}` at jumps and zero at stays,
/// and `F Z_{g+k} = Z_{n_k}` for the `k`-th stay `n_k`.
pub fn standard_module(nu: &FinalType) -> Result<MonomialModule> {
    let g = nu.g();
    let n = 2 * g;
    let ext: Vec<usize> = (0..=n)
        .map(|i| {
            if i <= g {
                nu.at(i) as usize
            } else {
                let j = n - i;
                nu.at(j) as usize + g - j
            }
        })
        .collect();
    let labels = (1..=n).map(|i| format!("Z{i}")).collect();
    let mut f = vec![None; n];
    let mut v = vec![None; n];
    let mut stays = Vec::with_capacity(g);
    for i in 1..=n {
        if ext[i] == ext[i - 1] + 1 {
            v[i - 1] = Image::pos(ext[i] - 1);
        } else {
            stays.push(i);
        }
    }
    for (k, &s) in stays.iter().enumerate() {
        f[g + k] = Image::pos(s - 1);
    }
    MonomialModule::new(g, labels, f, v)
}

fn power_label(op: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => op.into(),
        _ => format!("{op}^{k}"),
    }
}

/// Block-diagonal sum; labels are prefixed with the 1-based factor index.
pub fn direct_sum(modules: &[MonomialModule]) -> Result<MonomialModule> {
    if modules.is_empty() {
        return Err(Error::InvalidModule("direct sum of no modules".into()));
    }
    if let [only] = modules {
        return Ok(only.clone());
    }
    let mut labels = Vec::new();
    let mut f = Vec::new();
    let mut v = Vec::new();
    let mut g = 0;
    let shift = |img: Option<Image>, off: usize| {
        img.map(|m| Image {
            target: m.target + off,
            ..m
        })
    };
    for (k, m) in modules.iter().enumerate() {
        let off = labels.len();
        labels.extend(m.labels.iter().map(|l| format!("{}.{l}", k + 1)));
        f.extend(m.f.iter().map(|&i| shift(i, off)));
        v.extend(m.v.iter().map(|&i| shift(i, off)));
        g += m.g;
    }
    MonomialModule::new(g, labels, f, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(m: &MonomialModule) -> Vec<u32> {
        m.final_type().unwrap().nu().to_vec()
    }

    fn i1(r: usize) -> MonomialModule {
        module_i_r_1(r).unwrap()
    }

    #[test]
    fn module_l_invariants() {
        let l = module_l();
        assert_eq!(l.stable_v_image().dim(), 1);
        assert_eq!(l.p_rank(), 1);
        assert_eq!(l.a_number(), 0);
        assert_eq!(nu(&l), vec![1]);
    }

    #[test]
    fn i_r_1_structure() {
        let m = i1(2);
        // basis F, F^2, 1, V
        let vd = m.apply_v(&m.whole());
        assert_eq!(vd, Subspace::from_indices(4, [3, 1]));
        for r in 1..=8 {
            let expected: Vec<u32> = (0..r as u32).collect();
            assert_eq!(nu(&i1(r)), expected);
            assert_eq!(i1(r).a_number(), 1);
            assert_eq!(i1(r).p_rank(), 0);
        }
        let s = i1(1);
        assert_eq!(s.kernel_f().intersect(&s.kernel_v()).dim(), 1);
        assert!(module_i_r_1(0).is_err());
    }

    #[test]
    fn i_2_1_prank_needs_stable_image() {
        let m = i1(2);
        let v2 = m.apply_v(&m.apply_v(&m.whole()));
        assert_eq!(v2.dim(), 1);
        assert_eq!(m.apply_v(&v2).dim(), 0);
        assert_eq!(m.p_rank(), 0);
        let ker_v2 = m.preimage_v(&m.kernel_v());
        assert_eq!(ker_v2.dim(), 3);
    }

    #[test]
    fn i_r_2_structure() {
        for r in 3..=8 {
            let m = module_i_r_2(r).unwrap();
            let mut expected: Vec<u32> = (0..=(r as u32 - 2)).collect();
            expected.push(r as u32 - 2);
            assert_eq!(nu(&m), expected);
            assert_eq!(m.a_number(), 2);
            assert_eq!(m.apply_v(&m.apply_v(&m.whole())).dim(), r - 2);
            assert_eq!(m.p_rank(), 0);
            let mu = m.final_type().unwrap().to_young();
            assert_eq!(mu.parts(), &[r as u32, 1]);

            // VD = <F^{r-1}> ⊕ <V, ..., V^{r-1}>
            let vd = m.apply_v(&m.whole());
            let expected_vd =
                Subspace::from_indices(2 * r, std::iter::once(r - 1).chain(r + 1..2 * r));
            assert_eq!(vd, expected_vd);
            // F^{-1}(VD) = <F^{r-2}, F^{r-1}> ⊕ <1, V, ..., V^{r-1}>
            let pre = m.preimage_f(&vd);
            let expected_pre =
                Subspace::from_indices(2 * r, [r - 2, r - 1].into_iter().chain(r..2 * r));
            assert_eq!(pre, expected_pre);
            assert_eq!(pre.dim(), r + 2);
        }
        assert!(module_i_r_2(2).is_err());
    }

    #[test]
    fn i_4_3_structure() {
        let m = module_i_4_3();
        let v2 = m.apply_v(&m.apply_v(&m.whole()));
        assert_eq!(m.label_of(&v2), "<Fy=V^2z>");
        assert_eq!(m.a_number(), 3);
        assert_eq!(m.p_rank(), 0);
        assert_eq!(nu(&m), vec![0, 0, 1, 1]);
    }

    #[test]
    fn literal_sum_of_i_4_3_factors_is_decomposable() {
        // E/(F^2-V) + E/(V^2-F) is I[3,2] and E/(F-V) is I[1,1]
        let m = direct_sum(&[module_i_r_2(3).unwrap(), i1(1)]).unwrap();
        assert_eq!(nu(&m), vec![0, 1, 1, 1]);
        assert_eq!(m.a_number(), 3);
    }

    #[test]
    fn standard_modules_recover_their_final_type() {
        for g in 1..=8 {
            for t in crate::strata::enumerate_final_types(g).unwrap() {
                let m = standard_module(&t).unwrap();
                let rep = m.canonical_filtration().unwrap();
                assert_eq!(rep.final_type, t);
                assert_eq!(m.p_rank(), t.p_rank());
                assert_eq!(m.a_number(), t.a_number());
                // the standard flag Z_1..Z_i is itself a final filtration
                for i in 0..=2 * g {
                    let n_i = Subspace::from_indices(2 * g, 0..i);
                    assert_eq!(m.apply_v(&n_i).dim(), m.apply_v(&n_i).indices().count());
                    let vi = m.apply_v(&n_i);
                    assert_eq!(vi, Subspace::from_indices(2 * g, 0..vi.dim()));
                    let pre = m.preimage_f(&n_i);
                    assert_eq!(pre, Subspace::from_indices(2 * g, 0..pre.dim()));
                }
            }
        }
    }

    #[test]
    fn i_4_3_is_the_standard_module_up_to_relabeling() {
        let t = FinalType::new(4, vec![0, 0, 1, 1]).unwrap();
        let std = standard_module(&t).unwrap();
        let m = module_i_4_3();
        let (a, b) = (
            std.canonical_filtration().unwrap(),
            m.canonical_filtration().unwrap(),
        );
        assert_eq!(a.final_type, b.final_type);
        assert_eq!(a.interaction, b.interaction);
    }

    #[test]
    fn direct_sums() {
        let l = module_l();
        assert_eq!(
            nu(&direct_sum(&[l.clone(), l.clone()]).unwrap()),
            vec![1, 2]
        );
        let m = direct_sum(&[l, i1(1), i1(2)]).unwrap();
        assert_eq!(nu(&m), vec![1, 1, 1, 2]);
        for g in 1..=5 {
            let ss = direct_sum(&vec![i1(1); g]).unwrap();
            assert_eq!(nu(&ss), vec![0; g]);
        }
        assert!(direct_sum(&[]).is_err());
    }

    #[test]
    fn fv_vanish() {
        for m in [module_l(), i1(3), module_i_r_2(4).unwrap(), module_i_4_3()] {
            let d = m.whole();
            assert_eq!(m.apply_f(&m.apply_v(&d)).dim(), 0);
            assert_eq!(m.apply_v(&m.apply_f(&d)).dim(), 0);
        }
    }

    #[test]
    fn malformed_modules_rejected() {
        let labels = vec!["a".to_string(), "b".to_string()];
        // FV != 0
        assert!(MonomialModule::new(
            1,
            labels.clone(),
            vec![Image::pos(1), None],
            vec![Image::pos(0), None]
        )
        .is_err());
        // V not injective off kernel
        assert!(MonomialModule::new(
            1,
            labels.clone(),
            vec![None, None],
            vec![Image::pos(0), Image::pos(0)]
        )
        .is_err());
        // wrong dimension
        assert!(MonomialModule::new(2, labels, vec![None, None], vec![None, None]).is_err());
    }

    #[test]
    fn fractional_slope_rejected() {
        // V: a -> b -> c, d -> e, F = 0. V(D) = <b,c,e> of dimension 3 maps
        // onto <c> of dimension 1, and nothing lies strictly in between
        let labels: Vec<String> = ["a", "b", "c", "d", "e", "h"].map(String::from).to_vec();
        let f = vec![None; 6];
        let v = vec![
            Image::pos(1),
            Image::pos(2),
            None,
            Image::pos(4),
            None,
            None,
        ];
        let m = MonomialModule::new(3, labels, f, v).unwrap();
        assert!(matches!(
            m.canonical_filtration(),
            Err(Error::InvalidModule(_))
        ));
    }

    #[test]
    fn filtration_flag_is_stable() {
        let cases = [
            direct_sum(&[module_l(), module_i_r_2(3).unwrap()]).unwrap(),
            direct_sum(&[i1(1), i1(3)]).unwrap(),
            module_i_4_3(),
            direct_sum(&[module_l(), module_l(), i1(2)]).unwrap(),
        ];
        for m in cases {
            let rep = m.canonical_filtration().unwrap();
            let flag = &rep.final_flag;
            assert_eq!(flag.len(), m.dim() + 1);
            for (i, n) in flag.iter().enumerate() {
                assert_eq!(n.dim(), i);
                assert!(flag.contains(&m.apply_v(n)));
                assert!(flag.contains(&m.preimage_f(n)));
            }
            let from_flag: Vec<u32> = (1..=m.g())
                .map(|i| m.apply_v(&flag[i]).dim() as u32)
                .collect();
            assert_eq!(from_flag, rep.final_type.nu());
        }
    }

    #[test]
    fn interaction_extremes() {
        for g in 1..=5 {
            let ord = direct_sum(&vec![module_l(); g]).unwrap();
            let rep = ord.canonical_filtration().unwrap();
            assert_eq!(rep.interaction[g - 1], 0);
            let ss = direct_sum(&vec![i1(1); g]).unwrap();
            let rep = ss.canonical_filtration().unwrap();
            assert_eq!(rep.interaction, (1..=g).collect::<Vec<_>>());
        }
    }
}
