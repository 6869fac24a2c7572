use std::collections::BTreeSet;

use serde::Serialize;

use super::Quiver;
use crate::error::Error;

/// A sequence of simple reflections, stored as vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn from_indices(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    /// Parses `3,2,1` or a JSON array of ids.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let ids: Vec<String> = if text.starts_with('[') {
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
        } else if text.is_empty() {
            Vec::new()
        } else {
            text.split(',').map(|s| s.trim().to_string()).collect()
        };
        let letters = ids.iter().map(|id| q.vertex(id)).collect::<Result<_, _>>()?;
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based letter access.
    pub fn letter(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word::from_indices(self.letters[..k].to_vec())
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.letters.iter().map(|&u| q.name(u)).collect::<Vec<_>>().join(",")
    }

    pub fn stats(&self, q: &Quiver) -> WordStats {
        let n = q.num_vertices();
        let mut first = vec![None; n];
        let mut last = vec![None; n];
        for (i, &u) in self.letters.iter().enumerate() {
            if first[u].is_none() {
                first[u] = Some(i + 1);
            }
            last[u] = Some(i + 1);
        }
        WordStats {
            support: (0..n).filter(|&u| first[u].is_some()).collect(),
            last,
            first,
        }
    }
}

/// Support and first/last occurrences (1-based) of a word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordStats {
    pub support: BTreeSet<usize>,
    pub last: Vec<Option<usize>>,
    pub first: Vec<Option<usize>>,
}

impl WordStats {
    pub fn p(&self, u: usize) -> Option<usize> {
        self.last[u]
    }

    pub fn m(&self, u: usize) -> Option<usize> {
        self.first[u]
    }

    /// Last occurrences, sorted.
    pub fn last_positions(&self) -> BTreeSet<usize> {
        self.last.iter().flatten().copied().collect()
    }

    /// Support vertices occurring exactly once.
    pub fn single(&self) -> BTreeSet<usize> {
        self.support
            .iter()
            .copied()
            .filter(|&u| self.first[u] == self.last[u])
            .collect()
    }
}

fn ordered_on(q: &Quiver, stats: &WordStats, set: &BTreeSet<usize>, pos: &[Option<usize>]) -> bool {
    q.arrows().iter().all(|a| {
        if !set.contains(&a.from) || !set.contains(&a.to) {
            return true;
        }
        match (pos[a.from], pos[a.to]) {
            (Some(x), Some(y)) => x < y,
            _ => !stats.support.contains(&a.from) || !stats.support.contains(&a.to),
        }
    })
}

/// Last occurrences increase along every arrow inside `set`.
pub fn is_c_ending(q: &Quiver, w: &Word, set: &BTreeSet<usize>) -> bool {
    let stats = w.stats(q);
    ordered_on(q, &stats, set, &stats.last)
}

/// First occurrences increase along every arrow inside `set`.
pub fn is_c_starting(q: &Quiver, w: &Word, set: &BTreeSet<usize>) -> bool {
    let stats = w.stats(q);
    ordered_on(q, &stats, set, &stats.first)
}

/// Smallest vertex set containing `u`, `v` and every vertex on a path between
/// two of its members.
pub fn convex_hull(q: &Quiver, u: usize, v: usize) -> BTreeSet<usize> {
    let reach = q.reachability();
    let mut set: BTreeSet<usize> = [u, v].into_iter().collect();
    loop {
        let extra: Vec<usize> = (0..q.num_vertices())
            .filter(|x| !set.contains(x))
            .filter(|&x| set.iter().any(|&a| reach[a][x]) && set.iter().any(|&b| reach[x][b]))
            .collect();
        if extra.is_empty() {
            return set;
        }
        set.extend(extra);
    }
}

/// For all repeated support vertices `u`, `v`, the word is c-ending or
/// c-starting on their convex hull (restricted to the support).
pub fn satisfies_diamond(q: &Quiver, w: &Word) -> bool {
    let stats = w.stats(q);
    let single = stats.single();
    let repeated: Vec<usize> = stats.support.difference(&single).copied().collect();
    for (i, &u) in repeated.iter().enumerate() {
        for &v in &repeated[i..] {
            let hull: BTreeSet<usize> = convex_hull(q, u, v)
                .intersection(&stats.support)
                .copied()
                .collect();
            if !is_c_ending(q, w, &hull) && !is_c_starting(q, w, &hull) {
                return false;
            }
        }
    }
    true
}

/// Whether some topological order of all vertices of `q` occurs as a
/// subsequence of `w`.
///
/// Greedy scan: a letter is taken as soon as all its in-neighbours are taken.
/// Taking an available letter early never hurts, since any embedding can be
/// shifted to use the earliest admissible occurrence.
pub fn contains_coxeter_subword(q: &Quiver, w: &Word) -> bool {
    let n = q.num_vertices();
    let mut placed = vec![false; n];
    let mut count = 0;
    for &u in w.letters() {
        if placed[u] {
            continue;
        }
        if q.arrows().iter().any(|a| a.to == u && !placed[a.from]) {
            continue;
        }
        placed[u] = true;
        count += 1;
    }
    count == n
}

/// Brute force over every topological order; used to cross-check the greedy
/// scan on small quivers.
pub fn contains_coxeter_subword_exhaustive(q: &Quiver, w: &Word) -> bool {
    q.all_topological_orders().iter().any(|order| {
        let mut it = w.letters().iter();
        order.iter().all(|v| it.any(|x| x == v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Quiver {
        Quiver::new(
            &["1", "2", "3"],
            &[("1", "2", "alpha"), ("2", "3", "beta"), ("1", "3", "gamma")],
        )
        .unwrap()
    }

    fn all(q: &Quiver) -> BTreeSet<usize> {
        (0..q.num_vertices()).collect()
    }

    #[test]
    fn stats_by_scan() {
        let q = triangle();
        let w = Word::parse(&q, "3,2,1,2,3,2").unwrap();
        let s = w.stats(&q);
        assert_eq!(s.last, vec![Some(3), Some(6), Some(5)]);
        assert_eq!(s.first, vec![Some(3), Some(2), Some(1)]);
        let e = Word::parse(&q, "").unwrap().stats(&q);
        assert!(e.support.is_empty());
        assert!(e.last.iter().all(Option::is_none));
    }

    #[test]
    fn c_ending_and_starting() {
        let q = triangle();
        let a = Word::parse(&q, "3,2,1,3,2,3").unwrap();
        assert!(is_c_ending(&q, &a, &all(&q)));
        let b = Word::parse(&q, "1,2,3,1,3,2,1").unwrap();
        assert!(is_c_starting(&q, &b, &all(&q)));
    }

    #[test]
    fn convex_hulls() {
        let q = triangle();
        assert_eq!(convex_hull(&q, 0, 2), [0, 1, 2].into_iter().collect());
        assert_eq!(convex_hull(&q, 1, 2), [1, 2].into_iter().collect());
        assert_eq!(convex_hull(&q, 1, 1), [1].into_iter().collect());
    }

    #[test]
    fn diamond_fails_for_triangle_example() {
        let q = triangle();
        assert!(!satisfies_diamond(&q, &Word::parse(&q, "3,1,2,3,1,3").unwrap()));
        assert!(satisfies_diamond(&q, &Word::parse(&q, "1,2,3").unwrap()));
    }

    #[test]
    fn coxeter_subwords() {
        let q = triangle();
        let w = Word::parse(&q, "3,1,2,3,1,3").unwrap();
        assert!(contains_coxeter_subword(&q, &w));
        assert!(contains_coxeter_subword_exhaustive(&q, &w));
        let short = Word::parse(&q, "1,2").unwrap();
        assert!(!contains_coxeter_subword(&q, &short));
        assert!(!contains_coxeter_subword(&q, &Word::parse(&q, "3,2,1").unwrap()));
    }

    #[test]
    fn word_parsing() {
        let q = triangle();
        assert_eq!(Word::parse(&q, r#"["3","2"]"#).unwrap().letters(), &[2, 1]);
        assert!(Word::parse(&q, "4").is_err());
    }
}
