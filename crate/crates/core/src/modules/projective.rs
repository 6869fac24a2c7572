use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use super::rep::{ActionQuiver, Module, Slot};
use crate::linalg::{Field, Matrix, Tracker};

/// A basis element `arrow · parent` of a cyclic module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathElement {
    pub slot: Slot,
    pub parent: Option<usize>,
    pub arrow: Option<usize>,
    /// Index inside its slot.
    pub index: usize,
}

/// A cyclic module held in a path basis grown from its generator, which sits
/// in degree 0.
#[derive(Clone, Debug)]
pub struct Cyclic<F: Field> {
    pub vertex: usize,
    pub module: Module<F>,
    pub elements: Vec<PathElement>,
}

impl<F: Field> Cyclic<F> {
    /// The submodule of `ambient` generated by `gen` at `slot`, re-based so
    /// that the generator is in degree 0.
    pub fn generated(ambient: &Module<F>, slot: Slot, gen: &[F::Elem]) -> Self {
        let f = ambient.field();
        let mut trackers: BTreeMap<Slot, Tracker<F::Elem>> = BTreeMap::new();
        let mut elements: Vec<PathElement> = Vec::new();
        let mut vectors: Vec<Vec<F::Elem>> = Vec::new();
        let mut queue = VecDeque::new();
        let mut offer = |s: Slot, v: Vec<F::Elem>, parent: Option<usize>, arrow: Option<usize>,
                         elements: &mut Vec<PathElement>, vectors: &mut Vec<Vec<F::Elem>>, queue: &mut VecDeque<usize>| {
            let t = trackers.entry(s).or_insert_with(|| Tracker::new(ambient.dim(s)));
            let index = t.len();
            if t.offer(f, &v) {
                elements.push(PathElement { slot: s, parent, arrow, index });
                vectors.push(v);
                queue.push_back(elements.len() - 1);
            }
        };
        offer(slot, gen.to_vec(), None, None, &mut elements, &mut vectors, &mut queue);
        while let Some(k) = queue.pop_front() {
            let s = elements[k].slot;
            for (a, _) in ambient.quiver().arrows_from(s.vertex) {
                if ambient.map(a, s).is_none() {
                    continue;
                }
                let img = ambient.act(a, s, &vectors[k]);
                if img.iter().all(|x| f.is_zero(x)) {
                    continue;
                }
                offer(ambient.target(a, s), img, Some(k), Some(a), &mut elements, &mut vectors, &mut queue);
            }
        }
        let mut module = Module::new(f.clone(), ambient.quiver().clone());
        for (s, t) in &trackers {
            module.set_dim(s.shifted(-slot.degree), t.len());
        }
        let mut by_slot: BTreeMap<Slot, Vec<usize>> = BTreeMap::new();
        for (k, e) in elements.iter().enumerate() {
            by_slot.entry(e.slot).or_default().push(k);
        }
        for (s, ks) in &by_slot {
            for (a, _) in ambient.quiver().arrows_from(s.vertex) {
                let t = ambient.target(a, *s);
                let Some(tt) = trackers.get(&t) else { continue };
                let columns: Vec<Vec<F::Elem>> = ks
                    .iter()
                    .map(|&k| tt.coords(f, &ambient.act(a, *s, &vectors[k])).expect("cyclic module is closed"))
                    .collect();
                module.set_map(a, s.shifted(-slot.degree), Matrix::from_columns(tt.len(), &columns, f.zero()));
            }
        }
        for e in elements.iter_mut() {
            e.slot = e.slot.shifted(-slot.degree);
        }
        Cyclic {
            vertex: slot.vertex,
            module,
            elements,
        }
    }

    pub fn generator_slot(&self) -> Slot {
        Slot::new(self.vertex, 0)
    }

    /// Elements grouped by slot, in slot order.
    pub fn slot_elements(&self) -> BTreeMap<Slot, Vec<usize>> {
        let mut out: BTreeMap<Slot, Vec<usize>> = BTreeMap::new();
        for (k, e) in self.elements.iter().enumerate() {
            out.entry(e.slot).or_default().push(k);
        }
        out
    }
}

/// A basic algebra presented by its indecomposable projective left modules.
#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    pub field: F,
    pub quiver: Arc<ActionQuiver>,
    pub projectives: Vec<Cyclic<F>>,
}

impl<F: Field> Algebra<F> {
    pub fn projective(&self, v: usize) -> &Cyclic<F> {
        &self.projectives[v]
    }

    pub fn dim(&self) -> usize {
        self.projectives.iter().map(|p| p.module.total_dim()).sum()
    }

    /// The simple module at `v`, in degree 0.
    pub fn simple(&self, v: usize) -> Module<F> {
        let mut s = Module::new(self.field.clone(), self.quiver.clone());
        s.set_dim(Slot::new(v, 0), 1);
        s
    }

    /// Degree-0 part: keeps degree-0 arrows and degree-0 components.
    pub fn degree_zero(&self) -> Algebra<F> {
        let kept: Vec<usize> = (0..self.quiver.arrows.len())
            .filter(|&a| self.quiver.arrows[a].deg == 0)
            .collect();
        let quiver = Arc::new(ActionQuiver {
            vertices: self.quiver.vertices.clone(),
            arrows: kept.iter().map(|&a| self.quiver.arrows[a].clone()).collect(),
        });
        let projectives = self
            .projectives
            .iter()
            .map(|p| {
                let m = p.module.restrict(quiver.clone(), &kept, |s| s.degree == 0);
                let gen = vec![self.field.one()];
                // the generator sits first in its slot
                Cyclic::generated(&m, p.generator_slot(), &pad(&self.field, gen, m.dim(p.generator_slot())))
            })
            .collect();
        Algebra {
            field: self.field.clone(),
            quiver,
            projectives,
        }
    }
}

fn pad<F: Field>(f: &F, mut v: Vec<F::Elem>, n: usize) -> Vec<F::Elem> {
    v.resize(n, f.zero());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;
    use crate::modules::rep::ActionArrow;

    #[test]
    fn path_basis_of_uniserial() {
        let f = Rationals;
        let q = Arc::new(ActionQuiver {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![ActionArrow { label: "a".into(), from: 0, to: 1, deg: 1 }],
        });
        let mut m = Module::new(f, q);
        m.set_dim(Slot::new(0, 3), 1);
        m.set_dim(Slot::new(1, 4), 1);
        m.set_map(0, Slot::new(0, 3), Matrix::identity(&f, 1));
        let c = Cyclic::generated(&m, Slot::new(0, 3), &[f.one()]);
        assert_eq!(c.elements.len(), 2);
        assert_eq!(c.module.degree_range(), Some((0, 1)));
        assert_eq!(c.elements[1].parent, Some(0));
    }
}
