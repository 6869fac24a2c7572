//! Quivers, the Coxeter group in its reflection representation, and the
//! word-level conditions used by the tilting criteria.

mod quiver;
mod word;

pub use quiver::{Arrow, Quiver};
pub use word::{
    contains_coxeter_subword, contains_coxeter_subword_exhaustive, convex_hull, is_c_ending,
    is_c_starting, satisfies_diamond, Word, WordStats,
};

use crate::error::Error;

/// Coefficients in the simple-root basis.
pub type Root = Vec<i64>;

/// The Coxeter group of a quiver acting on its root lattice.
#[derive(Clone, Debug)]
pub struct CoxeterContext {
    quiver: Quiver,
    cartan: Vec<Vec<i64>>,
}

impl CoxeterContext {
    pub fn new(quiver: Quiver) -> Self {
        let n = quiver.num_vertices();
        let cartan = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| if u == v { 2 } else { -(quiver.edge_count(u, v) as i64) })
                    .collect()
            })
            .collect();
        CoxeterContext { quiver, cartan }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, u: usize) -> Root {
        let mut x = vec![0; self.quiver.num_vertices()];
        x[u] = 1;
        x
    }

    pub fn reflect(&self, u: usize, x: &[i64]) -> Result<Root, Error> {
        let n = self.quiver.num_vertices();
        if u >= n {
            return Err(Error::UnknownVertex(u.to_string()));
        }
        let mut out = x.to_vec();
        let mut pairing: i64 = 0;
        for (a, xv) in self.cartan[u].iter().zip(x) {
            pairing = a
                .checked_mul(*xv)
                .and_then(|t| pairing.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        out[u] = x[u].checked_sub(pairing).ok_or(Error::Overflow)?;
        Ok(out)
    }

    /// `s_{u_1} ... s_{u_l} (x)`.
    pub fn act(&self, w: &Word, x: &[i64]) -> Result<Root, Error> {
        let mut y = x.to_vec();
        for &u in w.letters().iter().rev() {
            y = self.reflect(u, &y)?;
        }
        Ok(y)
    }

    /// Images of the simple roots, i.e. the matrix of `w` by columns.
    pub fn matrix(&self, w: &Word) -> Result<Vec<Root>, Error> {
        (0..self.quiver.num_vertices())
            .map(|v| self.act(w, &self.simple_root(v)))
            .collect()
    }

    pub fn is_reduced(&self, w: &Word) -> Result<bool, Error> {
        let letters = w.letters();
        for k in 0..letters.len() {
            let prefix = Word::from_indices(letters[..k].to_vec());
            let root = self.act(&prefix, &self.simple_root(letters[k]))?;
            if !is_positive(&root) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require_reduced(&self, w: &Word) -> Result<(), Error> {
        if self.is_reduced(w)? {
            Ok(())
        } else {
            Err(Error::NotReduced(w.display(&self.quiver)))
        }
    }

    pub fn same_element(&self, a: &Word, b: &Word) -> Result<bool, Error> {
        Ok(self.matrix(a)? == self.matrix(b)?)
    }

    /// Every reduced word of length at most `max_len`, shortest first and
    /// lexicographic within a length.
    pub fn reduced_words(&self, max_len: usize) -> Result<Vec<Word>, Error> {
        let n = self.quiver.num_vertices();
        let mut out = vec![Word::from_indices(Vec::new())];
        let mut layer = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for u in 0..n {
                    // w s_u is longer than w iff w(α_u) > 0
                    if is_positive(&self.act(w, &self.simple_root(u))?) {
                        let mut letters = w.letters().to_vec();
                        letters.push(u);
                        next.push(Word::from_indices(letters));
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok(out)
    }
}

pub fn is_positive(x: &[i64]) -> bool {
    x.iter().all(|&c| c >= 0) && x.iter().any(|&c| c > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterContext {
        CoxeterContext::new(Quiver::new(&["1", "2"], &[("1", "2", "alpha")]).unwrap())
    }

    fn triangle() -> CoxeterContext {
        CoxeterContext::new(
            Quiver::new(
                &["1", "2", "3"],
                &[("1", "2", "alpha"), ("2", "3", "beta"), ("1", "3", "gamma")],
            )
            .unwrap(),
        )
    }

    #[test]
    fn reflection_examples() {
        let c = a2();
        assert_eq!(c.reflect(0, &[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(c.reflect(0, &[0, 1]).unwrap(), vec![1, 1]);
        for x in [[3, -2], [0, 5], [1, 1]] {
            assert_eq!(c.reflect(1, &c.reflect(1, &x).unwrap()).unwrap(), x.to_vec());
        }
        assert!(c.reflect(5, &[0, 0]).is_err());
    }

    #[test]
    fn reducedness() {
        let c = a2();
        assert!(!c.is_reduced(&Word::parse(c.quiver(), "1,1").unwrap()).unwrap());
        assert!(c.is_reduced(&Word::parse(c.quiver(), "").unwrap()).unwrap());
        let t = triangle();
        assert!(t.is_reduced(&Word::parse(t.quiver(), "3,2,1,2,3,2").unwrap()).unwrap());
    }

    #[test]
    fn same_element_by_hand() {
        let c = a2();
        let w12 = Word::parse(c.quiver(), "1,2").unwrap();
        let w21 = Word::parse(c.quiver(), "2,1").unwrap();
        // s1 = [[-1,1],[0,1]], s2 = [[1,0],[1,-1]] in columns; s1 s2 != s2 s1
        assert_eq!(c.matrix(&w12).unwrap(), vec![vec![0, 1], vec![-1, -1]]);
        assert!(!c.same_element(&w12, &w21).unwrap());
        assert!(c.same_element(&w12, &w12).unwrap());
        let t = triangle();
        let a = Word::parse(t.quiver(), "3,2,1,2,3,2").unwrap();
        let b = Word::parse(t.quiver(), "3,2,1,3,2,3").unwrap();
        assert!(t.same_element(&a, &b).unwrap());
    }

    #[test]
    fn a2_has_six_elements() {
        let c = a2();
        let words = c.reduced_words(5).unwrap();
        // e, s1, s2, s1s2, s2s1, and both words of the longest element
        assert_eq!(words.len(), 7);
        assert!(words.iter().all(|w| w.len() <= 3));
        assert!(words.iter().all(|w| c.is_reduced(w).unwrap()));
    }

    #[test]
    fn enumerated_words_are_exactly_the_reduced_ones() {
        let t = triangle();
        let words = t.reduced_words(4).unwrap();
        let mut brute = 0;
        for len in 0..=4u32 {
            for code in 0..3usize.pow(len) {
                let letters: Vec<usize> = (0..len).map(|i| code / 3usize.pow(i) % 3).collect();
                if t.is_reduced(&Word::from_indices(letters)).unwrap() {
                    brute += 1;
                }
            }
        }
        assert_eq!(words.len(), brute);
    }
}
