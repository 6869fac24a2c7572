//! Numerical checks of the structural statements around `M(w)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::end::{EndAlgebra, Shifts};
use super::WordModules;
use crate::coxeter::is_c_ending;
use crate::error::Error;
use crate::linalg::{Field, Subspace};
use crate::modules::{ext1_by_restriction, shift_window, stable_hom, ungraded_hom, Presentation, Slot, SlotSpaces};
use crate::preprojective::Piw;

/// `I_{k+1,m}/I_{1,m}` against `Hom_Π(Π/I_{1,k}, Π/I_{1,m})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomIdealIso {
    pub k: usize,
    pub m: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
}

pub fn verify_hom_ideal_iso<F: Field>(piw: &Piw<F>, k: usize, m: usize) -> Result<HomIdealIso, Error> {
    let l = piw.len();
    if k == 0 || k > m || m > l {
        return Err(Error::IndexOutOfRange { index: k.max(m), len: l });
    }
    let f = piw.field();
    let n = piw.quiver().num_vertices();
    let mut lhs = 0;
    for v in 0..n {
        let big = piw.ideal(k + 1, m, v)?;
        let small = piw.ideal(1, m, v)?;
        for (slot, sp) in &big {
            let below = small.get(slot).cloned().unwrap_or_else(|| Subspace::zero(sp.ambient()));
            lhs += sp.quotient_dim(f, &below)?;
        }
    }
    let alg = piw.algebra();
    let targets: Vec<_> = (0..n).map(|v| piw.quotient_column(m, v)).collect::<Result<_, _>>()?;
    let mut rhs = 0;
    for v in 0..n {
        let src = piw.quotient_column(k, v)?;
        if src.is_zero() {
            continue;
        }
        let pres = Presentation::new(alg, &src)?;
        for t in &targets {
            rhs += ungraded_hom(alg, &pres, t).values().sum::<usize>();
        }
    }
    Ok(HomIdealIso {
        k,
        m,
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// The ideal `A e_F A` of `A(w)` against the maps factoring through
/// projectives, blockwise over every shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjFac {
    pub ideal_dim: usize,
    pub projective_dim: usize,
    /// The two subspaces agree in every block, not only in dimension.
    pub equal: bool,
}

pub fn verify_projfac<F: Field>(ctx: &WordModules<F>) -> Result<ProjFac, Error> {
    let f = ctx.field();
    let alg = ctx.algebra();
    let end = EndAlgebra::new(ctx, &ctx.positions(), false, Shifts::All);
    let ideal = end.to_hom_coords(&end.ideal_through(ctx.last()));
    let mut ideal_dim = 0;
    let mut projective_dim = 0;
    let mut equal = true;
    let mut seen = BTreeSet::new();
    for (&(i, j, s), sp) in &ideal {
        seen.insert((i, j, s));
        let p = stable_hom(alg, ctx.presentation(i), ctx.presentation(j), s).projective_part;
        ideal_dim += sp.dim();
        projective_dim += p.dim();
        equal &= sp.is_subset(f, &p)? && p.is_subset(f, sp)?;
    }
    // blocks with no maps at all cannot carry projective maps either
    for i in ctx.positions() {
        for j in ctx.positions() {
            let Some((lo, hi)) = shift_window(ctx.module(i), ctx.module(j)) else { continue };
            for s in lo..=hi {
                if seen.contains(&(i, j, s)) {
                    continue;
                }
                let d = stable_hom(alg, ctx.presentation(i), ctx.presentation(j), s).projective_part.dim();
                projective_dim += d;
                equal &= d == 0;
            }
        }
    }
    Ok(ProjFac {
        ideal_dim,
        projective_dim,
        equal,
    })
}

/// Resolution of `A̲e_i` over the degree-0 algebra `A(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndResolutionRow {
    pub position: usize,
    pub in_f: bool,
    /// Positions carrying the top of `Ae_FAe_i`, the first syzygy.
    pub first_syzygy_top: Vec<usize>,
    pub second_syzygy_top: Vec<usize>,
    pub second_syzygy_projective: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EndResolution {
    NotApplicable,
    Checked { rows: Vec<EndResolutionRow>, holds: bool },
}

pub fn verify_end_resolution<F: Field>(ctx: &WordModules<F>) -> Result<EndResolution, Error> {
    let piw = ctx.piw();
    let q = piw.quiver();
    let all: BTreeSet<usize> = (0..q.num_vertices()).collect();
    if !is_c_ending(q, piw.word(), &all) {
        return Ok(EndResolution::NotApplicable);
    }
    let positions = ctx.positions();
    let end = EndAlgebra::new(ctx, &positions, false, Shifts::Zero);
    let (alg, projectives) = end.to_algebra()?;
    let ideal = end.ideal_through(ctx.last());
    let f_index: BTreeSet<usize> = positions
        .iter()
        .enumerate()
        .filter(|(_, p)| ctx.is_last(**p))
        .map(|(a, _)| a)
        .collect();
    let tops = |m: &crate::modules::Module<F>| -> Vec<usize> {
        m.top_dims().keys().map(|s| positions[s.vertex]).collect::<BTreeSet<_>>().into_iter().collect()
    };
    let mut rows = Vec::new();
    for (j, p) in projectives.iter().enumerate() {
        // A e_F A e_j inside A e_j, slot a holding block (a, j, 0)
        let spaces: SlotSpaces<F::Elem> = (0..positions.len())
            .filter_map(|a| {
                let d = p.dim(Slot::new(a, 0));
                (d > 0).then(|| (Slot::new(a, 0), ideal.get(&(a, j, 0)).cloned().unwrap_or_else(|| Subspace::zero(d))))
            })
            .collect();
        let in_f = f_index.contains(&j);
        if in_f {
            let everything = spaces.values().all(|s| s.is_full());
            rows.push(EndResolutionRow {
                position: positions[j],
                in_f,
                first_syzygy_top: Vec::new(),
                second_syzygy_top: Vec::new(),
                second_syzygy_projective: true,
                holds: everything,
            });
            continue;
        }
        let (quotient, _) = p.quotient(&spaces);
        let first = Presentation::new(&alg, &quotient)?;
        let second = Presentation::new(&alg, &first.syzygy)?;
        let first_syzygy_top = tops(&first.syzygy);
        let second_syzygy_top = tops(&second.syzygy);
        let second_syzygy_projective = second.syzygy.is_zero() || Presentation::new(&alg, &second.syzygy)?.is_projective();
        let in_add_f = |t: &[usize]| t.iter().all(|x| ctx.is_last(*x));
        rows.push(EndResolutionRow {
            position: positions[j],
            in_f,
            holds: in_add_f(&first_syzygy_top) && in_add_f(&second_syzygy_top) && second_syzygy_projective,
            first_syzygy_top,
            second_syzygy_top,
            second_syzygy_projective,
        });
    }
    let holds = rows.iter().all(|r| r.holds);
    Ok(EndResolution::Checked { rows, holds })
}

/// `Ext^1(X, Y(s))` against `Ext^1(Y, X(-1-s))`. Objects are `Ω^k M^i`,
/// written `(i, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SerreMismatch {
    pub x: (usize, usize),
    pub y: (usize, usize),
    pub shift: i32,
    pub lhs: usize,
    pub rhs: usize,
}

/// Objects `M^i` and, when `syzygies` is set, also `ΩM^i`. Needs depth 2.
pub fn serre_pairing<F: Field>(ctx: &WordModules<F>, syzygies: bool) -> Result<Vec<SerreMismatch>, Error> {
    let alg = ctx.algebra();
    let mut objects = Vec::new();
    for i in ctx.positions() {
        for k in 0..=usize::from(syzygies) {
            if !ctx.omega(i, k)?.module.is_zero() {
                objects.push((i, k));
            }
        }
    }
    // Ext^1 out of Ω^k M^i is stable Hom out of Ω^{k+1} M^i
    let window = |x: (usize, usize), y: (usize, usize)| -> Result<Option<(i32, i32)>, Error> {
        Ok(shift_window(&ctx.omega(x.0, x.1 + 1)?.module, &ctx.omega(y.0, y.1)?.module))
    };
    let mut table: BTreeMap<((usize, usize), (usize, usize), i32), usize> = BTreeMap::new();
    let mut ext = |x: (usize, usize), y: (usize, usize), s: i32| -> Result<usize, Error> {
        if let Some(d) = table.get(&(x, y, s)) {
            return Ok(*d);
        }
        let d = match window(x, y)? {
            Some((lo, hi)) if (lo..=hi).contains(&s) => {
                stable_hom(alg, ctx.omega(x.0, x.1 + 1)?, ctx.omega(y.0, y.1)?, s).dim()
            }
            _ => 0,
        };
        table.insert((x, y, s), d);
        Ok(d)
    };
    let mut out = Vec::new();
    for &x in &objects {
        for &y in &objects {
            let mut shifts = BTreeSet::new();
            if let Some((lo, hi)) = window(x, y)? {
                shifts.extend(lo..=hi);
            }
            if let Some((lo, hi)) = window(y, x)? {
                shifts.extend((lo..=hi).map(|t| -1 - t));
            }
            for s in shifts {
                let lhs = ext(x, y, s)?;
                let rhs = ext(y, x, -1 - s)?;
                if lhs != rhs {
                    out.push(SerreMismatch { x, y, shift: s, lhs, rhs });
                }
            }
        }
    }
    Ok(out)
}

/// Disagreement between two computations of the same `Ext^j(M^from, M^to(shift))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteMismatch {
    pub j: usize,
    pub from: usize,
    pub to: usize,
    pub shift: i32,
    pub stable: usize,
    pub other: usize,
}

/// Stable Hom out of `Ω^j M` against the cokernel of restriction along
/// `Ω^j M ⊆ P_{j-1}`, for `1 <= j <= max_j`.
pub fn ext_routes_agree<F: Field>(ctx: &WordModules<F>, max_j: usize) -> Result<Vec<RouteMismatch>, Error> {
    let alg = ctx.algebra();
    let mut out = Vec::new();
    for a in ctx.positions() {
        for j in 1..=max_j.min(ctx.depth()) {
            let (prev, cur) = (ctx.omega(a, j - 1)?, ctx.omega(a, j)?);
            for b in ctx.positions() {
                let n = ctx.presentation(b);
                let Some((lo, hi)) = shift_window(&cur.module, &n.module) else { continue };
                for s in lo..=hi {
                    let stable = stable_hom(alg, cur, n, s).dim();
                    let other = ext1_by_restriction(alg, prev, cur, &n.module, s);
                    if stable != other {
                        out.push(RouteMismatch { j, from: a, to: b, shift: s, stable, other });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Direct `Ext^j` for `s >= 0` against the Serre-dual route used for large
/// syzygies, for `2 <= j <= max_j`.
pub fn dual_route_agrees<F: Field>(ctx: &WordModules<F>, max_j: usize) -> Result<Vec<RouteMismatch>, Error> {
    let alg = ctx.algebra();
    let mut out = Vec::new();
    for a in ctx.positions() {
        for j in 2..=max_j.min(ctx.depth()) {
            let src = ctx.omega(a, j)?;
            let dual_target = ctx.omega(a, j - 2)?;
            for b in ctx.positions() {
                let n = ctx.presentation(b);
                let mut shifts = BTreeSet::new();
                if let Some((lo, hi)) = shift_window(&src.module, &n.module) {
                    shifts.extend(lo.max(0)..=hi);
                }
                if let Some((lo, hi)) = shift_window(&n.module, &dual_target.module) {
                    shifts.extend((lo..=hi.min(-1)).map(|t| -1 - t));
                }
                for s in shifts {
                    let stable = stable_hom(alg, src, n, s).dim();
                    let other = stable_hom(alg, n, dual_target, -1 - s).dim();
                    if stable != other {
                        out.push(RouteMismatch { j, from: a, to: b, shift: s, stable, other });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `dim (Ω²M^i)_0`, the degree-0 part of the second syzygy, per position.
pub fn degree_zero_kernels<F: Field>(ctx: &WordModules<F>) -> Result<BTreeMap<usize, usize>, Error> {
    ctx.positions()
        .into_iter()
        .map(|i| Ok((i, ctx.omega(i, 2)?.module.dim_in_degree(0))))
        .collect()
}
