//! Hom spaces computed from projective presentations.
//!
//! A morphism `M -> N(s)` is determined by the images of the generators of
//! `M`; it exists exactly when those images kill every relation. All Hom
//! spaces are therefore subspaces of `⊕_g N_{v_g, d_g + s}`.

use std::collections::BTreeMap;

use super::projective::{Algebra, Cyclic};
use super::rep::{Module, Morphism, Slot};
use crate::error::Error;
use crate::linalg::{kernel_of_rows, solve, Field, Matrix, Subspace, Tracker};

#[derive(Clone, Debug)]
pub struct Generator<E> {
    pub slot: Slot,
    pub image: Vec<E>,
}

/// Minimal projective presentation `P -> M` with its first syzygy.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub module: Module<F>,
    pub gens: Vec<Generator<F::Elem>>,
    pub cover: Module<F>,
    /// Per generator, the offset of its elements inside each cover slot.
    pub offsets: Vec<BTreeMap<Slot, usize>>,
    pub cover_map: Morphism<F::Elem>,
    pub section: Morphism<F::Elem>,
    pub syzygy: Module<F>,
    pub syzygy_incl: Morphism<F::Elem>,
    /// Generators of the syzygy, as cover vectors.
    pub relations: Vec<(Slot, Vec<F::Elem>)>,
}

impl<F: Field> Presentation<F> {
    pub fn new(alg: &Algebra<F>, m: &Module<F>) -> Result<Self, Error> {
        if !(std::sync::Arc::ptr_eq(m.quiver(), &alg.quiver) || **m.quiver() == *alg.quiver) {
            return Err(Error::AlgebraMismatch);
        }
        let f = &alg.field;
        let gens: Vec<Generator<F::Elem>> = m
            .top_lifts()
            .into_iter()
            .map(|(slot, image)| Generator { slot, image })
            .collect();
        let parts: Vec<Module<F>> = gens
            .iter()
            .map(|g| alg.projective(g.slot.vertex).module.shift(-g.slot.degree))
            .collect();
        let refs: Vec<&Module<F>> = parts.iter().collect();
        let (cover, offsets) = Module::direct_sum(f, alg.quiver.clone(), &refs);

        // images of every path element under the cover map
        let mut columns: BTreeMap<Slot, Vec<(usize, Vec<F::Elem>)>> = BTreeMap::new();
        for (gi, g) in gens.iter().enumerate() {
            let p = alg.projective(g.slot.vertex);
            let mut imgs: Vec<Vec<F::Elem>> = Vec::with_capacity(p.elements.len());
            for e in &p.elements {
                let v = match (e.parent, e.arrow) {
                    (Some(par), Some(a)) => {
                        let ps = p.elements[par].slot.shifted(g.slot.degree);
                        m.act(a, ps, &imgs[par])
                    }
                    _ => g.image.clone(),
                };
                let s = e.slot.shifted(g.slot.degree);
                columns.entry(s).or_default().push((offsets[gi][&s] + e.index, v.clone()));
                imgs.push(v);
            }
        }
        let mut cover_map = Morphism::zero(0);
        let mut section = Morphism::zero(0);
        for (s, mut cols) in columns {
            cols.sort_by_key(|(i, _)| *i);
            let block = Matrix::from_columns(m.dim(s), &cols.into_iter().map(|(_, v)| v).collect::<Vec<_>>(), f.zero());
            if m.dim(s) > 0 {
                let mut sec_cols = Vec::with_capacity(m.dim(s));
                for i in 0..m.dim(s) {
                    let x = solve(f, &block, &crate::linalg::unit(f, m.dim(s), i))
                        .expect("projective cover is surjective");
                    sec_cols.push(x);
                }
                section.blocks.insert(s, Matrix::from_columns(cover.dim(s), &sec_cols, f.zero()));
                cover_map.blocks.insert(s, block);
            }
        }
        for (s, _) in m.slots() {
            assert!(cover_map.blocks.contains_key(&s), "cover misses slot {s:?}");
        }
        let ker = cover_map.kernel(&cover, m);
        let (syzygy, syzygy_incl) = cover.submodule(&ker);
        let relations = syzygy
            .top_lifts()
            .into_iter()
            .map(|(s, v)| (s, syzygy_incl.apply(f, s, &v, cover.dim(s))))
            .collect();
        Ok(Presentation {
            module: m.clone(),
            gens,
            cover,
            offsets,
            cover_map,
            section,
            syzygy,
            syzygy_incl,
            relations,
        })
    }

    pub fn is_projective(&self) -> bool {
        self.syzygy.is_zero()
    }
}

/// Matrices `T_k : N_{g} -> N_{slot(k)}` carrying a generator image along
/// every path element.
struct Transport<E> {
    /// Per generator: target slot of the generator image and its dim.
    layout: Vec<(Slot, usize, usize)>,
    total: usize,
    maps: Vec<Vec<Option<Matrix<E>>>>,
}

impl<E: Clone + PartialEq> Transport<E> {
    fn new<F: Field<Elem = E>>(alg: &Algebra<F>, gens: &[Generator<E>], n: &Module<F>, shift: i32) -> Self {
        let f = &alg.field;
        let mut layout = Vec::with_capacity(gens.len());
        let mut total = 0;
        let mut maps = Vec::with_capacity(gens.len());
        for g in gens {
            let base = g.slot.shifted(shift);
            let dim = n.dim(base);
            layout.push((base, total, dim));
            total += dim;
            let p: &Cyclic<F> = alg.projective(g.slot.vertex);
            let mut ts: Vec<Option<Matrix<E>>> = Vec::with_capacity(p.elements.len());
            for e in &p.elements {
                let t = match (e.parent, e.arrow) {
                    (Some(par), Some(a)) => match &ts[par] {
                        None => None,
                        Some(prev) => {
                            let ps = p.elements[par].slot.shifted(g.slot.degree + shift);
                            n.map(a, ps).map(|m| m.mul(f, prev)).filter(|m| !m.is_zero(f))
                        }
                    },
                    _ => (dim > 0).then(|| Matrix::identity(f, dim)),
                };
                ts.push(t);
            }
            maps.push(ts);
        }
        Transport { layout, total, maps }
    }

    /// Linear map from generator images to the value on a cover vector at
    /// cover slot `s`, as a `dim N_{s+shift} × total` matrix.
    fn evaluation<F: Field<Elem = E>>(
        &self,
        f: &F,
        alg: &Algebra<F>,
        pres_gens: &[Generator<E>],
        offsets: &[BTreeMap<Slot, usize>],
        s: Slot,
        v: &[E],
        target_dim: usize,
    ) -> Matrix<E> {
        let mut out = Matrix::zeros(f, target_dim, self.total);
        if target_dim == 0 {
            return out;
        }
        for (gi, g) in pres_gens.iter().enumerate() {
            let Some(&off) = offsets[gi].get(&s) else { continue };
            let p = alg.projective(g.slot.vertex);
            let (_, col0, _) = self.layout[gi];
            for (k, e) in p.elements.iter().enumerate() {
                if e.slot.shifted(g.slot.degree) != s {
                    continue;
                }
                let c = &v[off + e.index];
                if f.is_zero(c) {
                    continue;
                }
                let Some(t) = &self.maps[gi][k] else { continue };
                for r in 0..t.rows() {
                    for j in 0..t.cols() {
                        let x = t.get(r, j);
                        if !f.is_zero(x) {
                            let cur = out.get(r, col0 + j).clone();
                            out.set(r, col0 + j, f.add(&cur, &f.mul(c, x)));
                        }
                    }
                }
            }
        }
        out
    }
}

/// `Hom(M, N(shift))` in generator-image coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace<E> {
    pub shift: i32,
    /// Per generator of the source: (target slot, offset, dim).
    pub layout: Vec<(Slot, usize, usize)>,
    pub total: usize,
    pub space: Subspace<E>,
}

impl<E: Clone + PartialEq> HomSpace<E> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// The relation map `⊕_g N_g -> ⊕_r N_{slot(r)+shift}`; its kernel is the Hom
/// space and its image is the restriction of maps from the cover.
fn relation_rows<F: Field>(
    alg: &Algebra<F>,
    pres: &Presentation<F>,
    tr: &Transport<F::Elem>,
    n: &Module<F>,
    shift: i32,
) -> Vec<Vec<F::Elem>> {
    let f = &alg.field;
    let mut rows = Vec::new();
    for (s, v) in &pres.relations {
        let td = n.dim(s.shifted(shift));
        if td == 0 {
            continue;
        }
        let m = tr.evaluation(f, alg, &pres.gens, &pres.offsets, *s, v, td);
        rows.extend(m.to_rows());
    }
    rows
}

pub fn hom<F: Field>(alg: &Algebra<F>, pres: &Presentation<F>, n: &Module<F>, shift: i32) -> HomSpace<F::Elem> {
    let tr = Transport::new(alg, &pres.gens, n, shift);
    let rows = relation_rows(alg, pres, &tr, n, shift);
    let space = kernel_of_rows(&alg.field, rows, tr.total);
    HomSpace {
        shift,
        layout: tr.layout,
        total: tr.total,
        space,
    }
}

/// Value of the morphism with generator images `coords` on a vector of the
/// source at `slot`.
pub fn apply_hom<F: Field>(
    alg: &Algebra<F>,
    pres: &Presentation<F>,
    n: &Module<F>,
    shift: i32,
    coords: &[F::Elem],
    slot: Slot,
    v: &[F::Elem],
) -> Vec<F::Elem> {
    let f = &alg.field;
    let td = n.dim(slot.shifted(shift));
    let lifted = pres.section.apply(f, slot, v, pres.cover.dim(slot));
    let tr = Transport::new(alg, &pres.gens, n, shift);
    tr.evaluation(f, alg, &pres.gens, &pres.offsets, slot, &lifted, td)
        .apply(f, coords)
}

/// The full family of matrices of a morphism given by generator images.
pub fn hom_morphism<F: Field>(
    alg: &Algebra<F>,
    pres: &Presentation<F>,
    n: &Module<F>,
    shift: i32,
    coords: &[F::Elem],
) -> Morphism<F::Elem> {
    let f = &alg.field;
    let tr = Transport::new(alg, &pres.gens, n, shift);
    let mut blocks = BTreeMap::new();
    for (s, d) in pres.module.slots() {
        let td = n.dim(s.shifted(shift));
        if td == 0 {
            continue;
        }
        let sec = pres.section.block(&pres.module, &pres.cover, s);
        let ev_cols: Vec<Vec<F::Elem>> = (0..d)
            .map(|j| {
                tr.evaluation(f, alg, &pres.gens, &pres.offsets, s, &sec.column(j), td)
                    .apply(f, coords)
            })
            .collect();
        let m = Matrix::from_columns(td, &ev_cols, f.zero());
        if !m.is_zero(f) {
            blocks.insert(s, m);
        }
    }
    Morphism { shift, blocks }
}

/// `y ∘ x` for `x : A -> B(s)` and `y : B -> C(t)`, in the generator-image
/// coordinates of `Hom(A, C(s + t))`.
#[allow(clippy::too_many_arguments)]
pub fn compose_homs<F: Field>(
    alg: &Algebra<F>,
    a: &Presentation<F>,
    b: &Presentation<F>,
    c: &Module<F>,
    s: i32,
    x: &[F::Elem],
    t: i32,
    y: &[F::Elem],
) -> Vec<F::Elem> {
    let f = &alg.field;
    let tr = Transport::new(alg, &b.gens, c, t);
    let mut out = Vec::new();
    let mut off = 0;
    for g in &a.gens {
        let slot = g.slot.shifted(s);
        let d = b.module.dim(slot);
        let v = &x[off..off + d];
        off += d;
        let td = c.dim(slot.shifted(t));
        if td == 0 {
            continue;
        }
        let lifted = b.section.apply(f, slot, v, b.cover.dim(slot));
        out.extend(tr.evaluation(f, alg, &b.gens, &b.offsets, slot, &lifted, td).apply(f, y));
    }
    out
}

/// Generator-image coordinates of the identity of `M`.
pub fn identity_coords<F: Field>(pres: &Presentation<F>) -> Vec<F::Elem> {
    pres.gens.iter().flat_map(|g| g.image.iter().cloned()).collect()
}

/// Hom space together with the subspace of maps factoring through a
/// projective module.
#[derive(Clone, Debug)]
pub struct StableHom<E> {
    pub hom: HomSpace<E>,
    pub projective_part: Subspace<E>,
}

impl<E: Clone + PartialEq> StableHom<E> {
    pub fn dim(&self) -> usize {
        self.hom.dim() - self.projective_part.dim()
    }

    /// Representatives of a basis of the quotient, and a tracker that
    /// expresses any map in terms of (projective part, representatives).
    pub fn quotient_basis<F: Field<Elem = E>>(&self, f: &F) -> (Vec<Vec<E>>, Tracker<E>) {
        let mut t = Tracker::new(self.hom.total);
        for v in self.projective_part.basis() {
            t.offer(f, v);
        }
        let mut reps = Vec::new();
        for v in self.hom.space.basis() {
            if t.offer(f, v) {
                reps.push(v.clone());
            }
        }
        (reps, t)
    }
}

/// Maps `M -> N(shift)` modulo those factoring through projectives. Any such
/// map factors through the projective cover of `N`, since maps from a
/// projective lift along the surjection `P_N -> N`.
pub fn stable_hom<F: Field>(
    alg: &Algebra<F>,
    pres: &Presentation<F>,
    n_pres: &Presentation<F>,
    shift: i32,
) -> StableHom<F::Elem> {
    let f = &alg.field;
    let n = &n_pres.module;
    let h = hom(alg, pres, n, shift);
    let through = hom(alg, pres, &n_pres.cover, shift);
    let cover_layout = &through.layout;
    let images: Vec<Vec<F::Elem>> = through
        .space
        .basis()
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(h.total);
            for (gi, (slot, off, dim)) in cover_layout.iter().enumerate() {
                let part = &c[*off..*off + *dim];
                let img = n_pres.cover_map.apply(f, *slot, part, n.dim(*slot));
                debug_assert_eq!(img.len(), h.layout[gi].2);
                out.extend(img);
            }
            out
        })
        .collect();
    let projective_part = Subspace::span(f, h.total, images);
    StableHom {
        hom: h,
        projective_part,
    }
}

/// Shifts `s` outside this window give zero Hom by degree reasons.
pub fn shift_window<F: Field>(m: &Module<F>, n: &Module<F>) -> Option<(i32, i32)> {
    let (mlo, mhi) = m.degree_range()?;
    let (nlo, nhi) = n.degree_range()?;
    Some((nlo - mhi, nhi - mlo))
}

/// Dimensions of `Hom(M, N(s))` for every shift in the exact window.
pub fn ungraded_hom<F: Field>(alg: &Algebra<F>, pres: &Presentation<F>, n: &Module<F>) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    if let Some((lo, hi)) = shift_window(&pres.module, n) {
        for s in lo..=hi {
            let d = hom(alg, pres, n, s).dim();
            if d > 0 {
                out.insert(s, d);
            }
        }
    }
    out
}

/// `Ext^1(M, N(shift))` as the cokernel of restriction `Hom(P, N) -> Hom(ΩM, N)`.
/// `omega_pres` must be the presentation of `pres.syzygy`.
pub fn ext1_by_restriction<F: Field>(
    alg: &Algebra<F>,
    pres: &Presentation<F>,
    omega_pres: &Presentation<F>,
    n: &Module<F>,
    shift: i32,
) -> usize {
    if pres.is_projective() {
        return 0;
    }
    let tr = Transport::new(alg, &pres.gens, n, shift);
    let rows = relation_rows(alg, pres, &tr, n, shift);
    let restricted_rank = Matrix::from_rows(tr.total, rows).rank(&alg.field);
    hom(alg, omega_pres, n, shift).dim() - restricted_rank
}
