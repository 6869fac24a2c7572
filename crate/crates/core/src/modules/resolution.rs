//! Syzygies, Ext groups and global dimension.

use super::hom::{ext1_by_restriction, stable_hom, Presentation};
use super::projective::Algebra;
use super::rep::Module;
use crate::error::Error;
use crate::linalg::Field;

/// Presentations of `M, ΩM, Ω²M, …` up to `depth` syzygies.
pub fn syzygy_chain<F: Field>(alg: &Algebra<F>, m: &Module<F>, depth: usize) -> Result<Vec<Presentation<F>>, Error> {
    let mut out = vec![Presentation::new(alg, m)?];
    for _ in 0..depth {
        let next = Presentation::new(alg, &out.last().expect("nonempty").syzygy)?;
        out.push(next);
    }
    Ok(out)
}

pub fn syzygy<F: Field>(alg: &Algebra<F>, m: &Module<F>, k: usize) -> Result<Module<F>, Error> {
    let mut cur = m.clone();
    for _ in 0..k {
        cur = Presentation::new(alg, &cur)?.syzygy;
    }
    Ok(cur)
}

/// `dim Ext^j(M, N(shift))` as stable `Hom(Ω^j M, N(shift))`; `chain` holds
/// presentations of `M, ΩM, …` and `n` is the presentation of `N`.
pub fn ext_stable<F: Field>(alg: &Algebra<F>, chain: &[Presentation<F>], j: usize, n: &Presentation<F>, shift: i32) -> usize {
    stable_hom(alg, &chain[j], n, shift).dim()
}

/// `dim Ext^j(M, N(shift))` as the cokernel of restriction along
/// `Ω^j M ⊆ P_{j-1}`.
pub fn ext_restriction<F: Field>(alg: &Algebra<F>, chain: &[Presentation<F>], j: usize, n: &Module<F>, shift: i32) -> usize {
    assert!(j >= 1, "Ext index starts at 1");
    ext1_by_restriction(alg, &chain[j - 1], &chain[j], n, shift)
}

/// Projective dimension, or `None` when it exceeds `cap`.
pub fn projective_dimension<F: Field>(alg: &Algebra<F>, m: &Module<F>, cap: usize) -> Result<Option<usize>, Error> {
    let mut cur = m.clone();
    for k in 0..=cap {
        if cur.is_zero() {
            return Ok(Some(k.saturating_sub(1)));
        }
        let p = Presentation::new(alg, &cur)?;
        if p.is_projective() {
            return Ok(Some(k));
        }
        cur = p.syzygy;
    }
    Ok(None)
}

/// Global dimension as the largest projective dimension of a simple module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    Exact(usize),
    AtLeast(usize),
}

impl GlobalDimension {
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, GlobalDimension::Exact(d) if d <= bound)
    }
}

pub fn global_dimension<F: Field>(alg: &Algebra<F>, cap: usize) -> Result<GlobalDimension, Error> {
    let mut best = 0;
    for v in 0..alg.projectives.len() {
        match projective_dimension(alg, &alg.simple(v), cap)? {
            Some(d) => best = best.max(d),
            None => return Ok(GlobalDimension::AtLeast(cap + 1)),
        }
    }
    Ok(GlobalDimension::Exact(best))
}
