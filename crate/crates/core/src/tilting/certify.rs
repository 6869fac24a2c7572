//! Silting and tilting verdicts for `M(w)`.
//!
//! In the stable category `Hom(M, M[j])` is `Ext^j(M, M)` for `j > 0` and
//! stable `Hom(M, Ω^{-j} M)` for `j < 0`, always in degree 0.

use std::collections::BTreeSet;

use serde::Serialize;

use super::WordModules;
use crate::coxeter::{contains_coxeter_subword, is_c_ending, is_c_starting, satisfies_diamond};
use crate::error::Error;
use crate::linalg::Field;
use crate::modules::{hom, shift_window, stable_hom, GlobalDimension};
use crate::qw::{underline_qw, DegAcyclic};

pub const GLDIM_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub c_ending: bool,
    pub c_starting: bool,
    pub diamond: bool,
    pub coxeter_subword: bool,
    /// `gl.dim Π(w)_0`, `None` beyond the cap.
    pub gldim_degree_zero: Option<usize>,
}

impl Conditions {
    pub fn gldim_at_most_one(&self) -> bool {
        matches!(self.gldim_degree_zero, Some(d) if d <= 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtEntry {
    pub j: usize,
    pub from: usize,
    pub to: usize,
    pub shift: i32,
    pub dim: usize,
}

/// `Hom(M^from, Ω^k M^to)` in degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub hom_dim: usize,
    pub stable_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SiltingReport {
    /// `Ext^1(M, M(s)) = 0` for every `s`.
    pub ext1_zero: bool,
    pub ext1_nonzero: Vec<ExtEntry>,
    /// `J`: higher `Ext^j(M, M)` are checked for `2 <= j <= J`.
    pub higher_window: usize,
    pub higher_ext_zero: bool,
    pub higher_nonzero: Vec<ExtEntry>,
    /// `(j, i)` with `Ω^j M^i` over the size budget, so that `Ext^j(M^i, -)`
    /// went through Serre duality.
    pub dual_route: Vec<(usize, usize)>,
    /// An order on `underline Q(w)` witnessing deg-acyclicity.
    pub thick_certificate: Option<Vec<usize>>,
    pub silting: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    CEnding,
    CStarting,
    /// The diamond condition together with `gl.dim Π(w)_0 <= 1`.
    DiamondGldim,
    /// Covers `Hom(M, M[j])` for `j < -1`.
    CoxeterSubword,
    /// Covers `Hom(M, M[j])` for `j < -1`.
    GldimDegreeZero,
    /// `Hom(M, M[-1]) = 0` checked directly.
    NumericMinusOne,
    /// `Hom(M, Ω^k M) = 0` for `2 <= k <= K`, with `Ω^K M = 0`.
    NumericWindow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Tilting { certificates: Vec<Certificate> },
    NotTilting { witness: HomWitness },
    Inconclusive { omega_window: usize },
}

impl Verdict {
    pub fn is_tilting(&self) -> bool {
        matches!(self, Verdict::Tilting { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingReport {
    pub word: Vec<String>,
    pub field: String,
    pub conditions: Conditions,
    pub silting: SiltingReport,
    /// `K`: `Hom(M, Ω^k M)` is computed for `1 <= k <= K`.
    pub omega_window: usize,
    /// Pairs of non-projective summands with nonzero `Hom(M^i, Ω M^j)`.
    pub minus_one: Vec<HomWitness>,
    /// Nonzero stable `Hom(M^i, Ω^k M^j)` for `2 <= k <= K`.
    pub lower_nonzero: Vec<HomWitness>,
    /// `(j, k)` with `Ω^k M^j` over the size budget, left unchecked.
    pub lower_skipped: Vec<(usize, usize)>,
    pub verdict: Verdict,
    /// Certified statements contradicted by a computation.
    pub violations: Vec<String>,
}

pub fn conditions<F: Field>(ctx: &WordModules<F>) -> Result<Conditions, Error> {
    let piw = ctx.piw();
    let q = piw.quiver();
    let w = piw.word();
    let all: BTreeSet<usize> = (0..q.num_vertices()).collect();
    let gldim = match crate::modules::global_dimension(&piw.algebra().degree_zero(), GLDIM_CAP)? {
        GlobalDimension::Exact(d) => Some(d),
        GlobalDimension::AtLeast(_) => None,
    };
    Ok(Conditions {
        c_ending: is_c_ending(q, w, &all),
        c_starting: is_c_starting(q, w, &all),
        diamond: satisfies_diamond(q, w),
        coxeter_subword: contains_coxeter_subword(q, w),
        gldim_degree_zero: gldim,
    })
}

/// Nonzero `dim Ext^j(M^a, M^b(s))` for `s >= 0`, as stable Hom out of
/// `Ω^j M^a`. `None` when that syzygy is over the size budget.
fn ext_direct<F: Field>(ctx: &WordModules<F>, j: usize, a: usize, b: usize) -> Result<Option<Vec<(i32, usize)>>, Error> {
    let Some(src) = ctx.omega_within_budget(a, j)? else {
        return Ok(None);
    };
    let dst = ctx.presentation(b);
    let Some((lo, hi)) = shift_window(&src.module, &dst.module) else {
        return Ok(Some(Vec::new()));
    };
    Ok(Some(
        (lo.max(0)..=hi)
            .map(|s| (s, stable_hom(ctx.algebra(), src, dst, s).dim()))
            .filter(|(_, d)| *d > 0)
            .collect(),
    ))
}

/// The same numbers for `j >= 2` through the Serre functor `[2](-1)`:
/// `Ext^j(X, Y(s))` is dual to stable `Hom(Y, Ω^{j-2} X(-1-s))`.
fn ext_dual<F: Field>(ctx: &WordModules<F>, j: usize, a: usize, b: usize) -> Result<Vec<(i32, usize)>, Error> {
    assert!(j >= 2, "the dual route needs j >= 2");
    let src = ctx.presentation(b);
    let dst = ctx.omega(a, j - 2)?;
    let Some((lo, hi)) = shift_window(&src.module, &dst.module) else {
        return Ok(Vec::new());
    };
    Ok((lo..=hi.min(-1))
        .rev()
        .map(|t| (-1 - t, stable_hom(ctx.algebra(), src, dst, t).dim()))
        .filter(|(_, d)| *d > 0)
        .collect())
}

/// Nonzero `dim Ext^j(M^a, M^b(s))` for `s >= 0`, and whether the dual route
/// was taken.
pub fn ext_nonneg_shifts<F: Field>(ctx: &WordModules<F>, j: usize, a: usize, b: usize) -> Result<(Vec<(i32, usize)>, bool), Error> {
    match ext_direct(ctx, j, a, b)? {
        Some(v) => Ok((v, false)),
        None if j >= 2 => Ok((ext_dual(ctx, j, a, b)?, true)),
        None => Err(ctx.omega(a, j).err().expect("over budget")),
    }
}

/// `ext_window` is `J`. `Ext^1` is checked at every shift, higher `Ext^j`
/// at every shift `s >= 0`: the Serre functor forces `Ext^2(M, M(-1)) != 0`.
pub fn certify_silting<F: Field>(ctx: &WordModules<F>, ext_window: usize) -> Result<SiltingReport, Error> {
    assert!(ext_window <= ctx.depth(), "syzygy depth too small for the Ext window");
    let alg = ctx.algebra();
    let mut ext1_nonzero = Vec::new();
    let mut higher_nonzero = Vec::new();
    let mut dual_route = BTreeSet::new();
    let summands = ctx.non_last();
    for &a in &summands {
        let omega = ctx.omega(a, 1)?;
        for b in ctx.positions() {
            let dst = ctx.presentation(b);
            if let Some((lo, hi)) = shift_window(&omega.module, &dst.module) {
                for shift in lo..=hi {
                    let dim = stable_hom(alg, omega, dst, shift).dim();
                    if dim > 0 {
                        ext1_nonzero.push(ExtEntry { j: 1, from: a, to: b, shift, dim });
                    }
                }
            }
            for j in 2..=ext_window {
                let (entries, dual) = ext_nonneg_shifts(ctx, j, a, b)?;
                if dual {
                    dual_route.insert((j, a));
                }
                for (shift, dim) in entries {
                    higher_nonzero.push(ExtEntry { j, from: a, to: b, shift, dim });
                }
            }
        }
    }
    let piw = ctx.piw();
    let thick_certificate = match underline_qw(piw.quiver(), piw.word())?.is_deg_acyclic() {
        DegAcyclic::Order(o) => Some(o),
        DegAcyclic::Cycle(_) => None,
    };
    let silting = ext1_nonzero.is_empty() && higher_nonzero.is_empty() && thick_certificate.is_some();
    Ok(SiltingReport {
        ext1_zero: ext1_nonzero.is_empty(),
        ext1_nonzero,
        higher_window: ext_window,
        higher_ext_zero: higher_nonzero.is_empty(),
        higher_nonzero,
        dual_route: dual_route.into_iter().collect(),
        thick_certificate,
        silting,
    })
}

/// `ext_window` is `J`, `omega_window` is `K`.
pub fn certify_tilting<F: Field>(ctx: &WordModules<F>, ext_window: usize, omega_window: usize) -> Result<TiltingReport, Error> {
    assert!(omega_window >= 1 && omega_window <= ctx.depth(), "syzygy depth too small for the Ω window");
    let alg = ctx.algebra();
    let conditions = conditions(ctx)?;
    let silting = certify_silting(ctx, ext_window)?;
    let summands = ctx.non_last();

    let mut minus_one = Vec::new();
    let mut lower_nonzero = Vec::new();
    let mut lower_skipped = Vec::new();
    // summands whose syzygies reach zero inside the window
    let mut resolved = BTreeSet::new();
    for &i in &summands {
        let src = ctx.presentation(i);
        for &j in &summands {
            for k in 1..=omega_window {
                let Some(dst) = ctx.omega_within_budget(j, k)? else {
                    lower_skipped.push((j, k));
                    break;
                };
                if dst.module.is_zero() {
                    resolved.insert(j);
                    break;
                }
                let stable_dim = stable_hom(alg, src, dst, 0).dim();
                let witness = |hom_dim| HomWitness {
                    from: i,
                    to: j,
                    k,
                    hom_dim,
                    stable_dim,
                };
                if k == 1 {
                    let hom_dim = hom(alg, src, &dst.module, 0).dim();
                    if hom_dim > 0 {
                        minus_one.push(witness(hom_dim));
                    }
                } else if stable_dim > 0 {
                    let hom_dim = hom(alg, src, &dst.module, 0).dim();
                    lower_nonzero.push(witness(hom_dim));
                }
            }
        }
    }

    let mut fast = Vec::new();
    if conditions.c_ending {
        fast.push(Certificate::CEnding);
    }
    if conditions.c_starting {
        fast.push(Certificate::CStarting);
    }
    if conditions.diamond && conditions.gldim_at_most_one() {
        fast.push(Certificate::DiamondGldim);
    }
    let mut below = Vec::new();
    if conditions.coxeter_subword {
        below.push(Certificate::CoxeterSubword);
    }
    if conditions.gldim_at_most_one() {
        below.push(Certificate::GldimDegreeZero);
    }

    lower_skipped.sort();
    lower_skipped.dedup();
    if lower_skipped.iter().any(|&(_, k)| k == 1) {
        let (j, _) = lower_skipped[0];
        return Err(ctx.omega(j, 1).err().expect("over budget"));
    }

    let first_minus_one = minus_one.iter().find(|h| h.stable_dim > 0).cloned();
    let first_lower = lower_nonzero.first().cloned();
    let mut violations = Vec::new();
    if !silting.ext1_zero {
        violations.push("Ext^1(M, M(s)) is nonzero for some shift".to_string());
    }
    if !silting.higher_ext_zero {
        violations.push("Hom(M, M[j]) is nonzero for some j >= 2".to_string());
    }
    if silting.thick_certificate.is_none() {
        violations.push("underline Q(w) is not deg-acyclic".to_string());
    }
    if let (Some(c), Some(h)) = (fast.first(), first_minus_one.as_ref().or(first_lower.as_ref())) {
        violations.push(format!(
            "{c:?} certifies tilting but Hom(M^{}, Ω^{} M^{}) is nonzero in the stable category",
            h.from, h.k, h.to
        ));
    }
    if let (Some(c), Some(h)) = (below.first(), first_lower.as_ref()) {
        violations.push(format!(
            "{c:?} rules out Hom(M, M[j]) for j < -1 but Hom(M^{}, Ω^{} M^{}) is nonzero",
            h.from, h.k, h.to
        ));
    }

    let covered = summands.iter().all(|j| resolved.contains(j));
    let verdict = if let Some(w) = first_minus_one.or(first_lower) {
        Verdict::NotTilting { witness: w }
    } else if !fast.is_empty() || !below.is_empty() || covered {
        let mut certificates = fast;
        certificates.push(Certificate::NumericMinusOne);
        certificates.extend(below);
        if covered {
            certificates.push(Certificate::NumericWindow);
        }
        Verdict::Tilting { certificates }
    } else {
        Verdict::Inconclusive { omega_window }
    };

    let piw = ctx.piw();
    Ok(TiltingReport {
        word: piw.word().letters().iter().map(|&u| piw.quiver().name(u).to_string()).collect(),
        field: piw.field().describe(),
        conditions,
        silting,
        omega_window,
        minus_one,
        lower_nonzero,
        lower_skipped,
        verdict,
        violations,
    })
}
