use std::collections::HashMap;

use crate::coxeter::Quiver;

/// A path of the (acyclic) quiver, composed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

/// All paths of an acyclic quiver, ordered by start vertex then arrow
/// sequence.
#[derive(Clone, Debug)]
pub struct PathTable {
    paths: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PathTable {
    pub fn new(q: &Quiver) -> Self {
        let mut paths = Vec::new();
        for v in 0..q.num_vertices() {
            let mut stack = vec![Path {
                start: v,
                end: v,
                arrows: Vec::new(),
            }];
            let mut from_v = Vec::new();
            while let Some(p) = stack.pop() {
                for (i, a) in q.arrows().iter().enumerate().rev() {
                    if a.from == p.end {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        stack.push(Path {
                            start: v,
                            end: a.to,
                            arrows,
                        });
                    }
                }
                from_v.push(p);
            }
            from_v.sort_by(|a, b| a.arrows.cmp(&b.arrows));
            paths.extend(from_v);
        }
        let index = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.start, p.arrows.clone()), i))
            .collect();
        PathTable { paths, index }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn get(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Path)> {
        self.paths.iter().enumerate()
    }

    pub fn trivial(&self, v: usize) -> usize {
        self.index[&(v, Vec::new())]
    }

    pub fn find(&self, start: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(start, arrows.to_vec())).copied()
    }

    /// `p` followed by `q`, if they compose.
    pub fn concat(&self, p: usize, q: usize) -> Option<usize> {
        let (a, b) = (&self.paths[p], &self.paths[q]);
        if a.end != b.start {
            return None;
        }
        let mut arrows = a.arrows.clone();
        arrows.extend(&b.arrows);
        self.find(a.start, &arrows)
    }

    /// The single-arrow path of arrow `i`.
    pub fn arrow(&self, q: &Quiver, i: usize) -> usize {
        self.find(q.arrows()[i].from, &[i]).expect("arrow path exists")
    }

    pub fn ending_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.paths.len()).filter(move |&i| self.paths[i].end == v)
    }

    pub fn starting_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.paths.len()).filter(move |&i| self.paths[i].start == v)
    }
}
