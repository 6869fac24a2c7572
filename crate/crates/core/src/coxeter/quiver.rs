use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

/// A finite acyclic quiver with string vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    index: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowFile>,
}

#[derive(Serialize, Deserialize)]
struct ArrowFile {
    from: String,
    to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(from, to, label)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self, Error> {
        let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let triples = arrows
            .iter()
            .map(|(a, b, l)| (a.as_ref().to_string(), b.as_ref().to_string(), Some(l.as_ref().to_string())))
            .collect();
        Self::build(names, triples)
    }

    fn build(vertices: Vec<String>, arrows: Vec<(String, String, Option<String>)>) -> Result<Self, Error> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut out = Vec::with_capacity(arrows.len());
        for (k, (from, to, label)) in arrows.into_iter().enumerate() {
            let s = *index.get(&from).ok_or_else(|| Error::UnknownVertex(from.clone()))?;
            let t = *index.get(&to).ok_or_else(|| Error::UnknownVertex(to.clone()))?;
            out.push(Arrow {
                from: s,
                to: t,
                label: label.unwrap_or_else(|| format!("a{}", k + 1)),
            });
        }
        let q = Quiver {
            vertices,
            arrows: out,
            index,
        };
        q.topological_order()?;
        Ok(q)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: QuiverFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let arrows = file.arrows.into_iter().map(|a| (a.from, a.to, a.label)).collect();
        Self::build(file.vertices, arrows)
    }

    pub fn to_json(&self) -> String {
        let file = QuiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowFile {
                    from: self.vertices[a.from].clone(),
                    to: self.vertices[a.to].clone(),
                    label: Some(a.label.clone()),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("quiver serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize, Error> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Number of edges between `u` and `v` in the underlying graph.
    pub fn edge_count(&self, u: usize, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.from == u && a.to == v) || (a.from == v && a.to == u))
            .count()
    }

    pub fn has_arrow(&self, u: usize, v: usize) -> bool {
        self.arrows.iter().any(|a| a.from == u && a.to == v)
    }

    /// Kahn order; an oriented cycle is an error.
    pub fn topological_order(&self) -> Result<Vec<usize>, Error> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.from == v) {
                indeg[a.to] -= 1;
                if indeg[a.to] == 0 {
                    queue.push_back(a.to);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).expect("some vertex is on a cycle");
            return Err(Error::Cyclic(self.vertices[stuck].clone()));
        }
        Ok(order)
    }

    /// `reach[u][v]` iff there is a path (possibly trivial) from `u` to `v`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut reach = vec![vec![false; n]; n];
        let order = self.topological_order().expect("quiver is acyclic");
        for &u in order.iter().rev() {
            reach[u][u] = true;
            for a in self.arrows.iter().filter(|a| a.from == u) {
                for v in 0..n {
                    if reach[a.to][v] {
                        reach[u][v] = true;
                    }
                }
            }
        }
        reach
    }

    /// Full subquiver on `keep`, in declared order; also returns the old index
    /// of each new vertex.
    pub fn full_subquiver(&self, keep: &BTreeSet<usize>) -> (Quiver, Vec<usize>) {
        let old: Vec<usize> = keep.iter().copied().collect();
        let mut new_of = vec![None; self.vertices.len()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = Some(i);
        }
        let vertices: Vec<String> = old.iter().map(|&v| self.vertices[v].clone()).collect();
        let index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(Arrow {
                    from: new_of[a.from]?,
                    to: new_of[a.to]?,
                    label: a.label.clone(),
                })
            })
            .collect();
        (
            Quiver {
                vertices,
                arrows,
                index,
            },
            old,
        )
    }

    /// Every topological order, for small quivers only.
    pub fn all_topological_orders(&self) -> Vec<Vec<usize>> {
        fn go(q: &Quiver, placed: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let n = q.num_vertices();
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if placed[v] {
                    continue;
                }
                if q.arrows.iter().any(|a| a.to == v && !placed[a.from]) {
                    continue;
                }
                placed[v] = true;
                cur.push(v);
                go(q, placed, cur, out);
                cur.pop();
                placed[v] = false;
            }
        }
        let mut out = Vec::new();
        go(self, &mut vec![false; self.num_vertices()], &mut Vec::new(), &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles_and_unknown_vertices() {
        assert!(matches!(
            Quiver::new(&["1", "2"], &[("1", "2", "a"), ("2", "1", "b")]),
            Err(Error::Cyclic(_))
        ));
        assert!(matches!(
            Quiver::new(&["1"], &[("1", "1", "l")]),
            Err(Error::Cyclic(_))
        ));
        assert!(matches!(
            Quiver::new(&["1"], &[("1", "3", "a")]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(Quiver::new(&["1", "1"], &[]), Err(Error::DuplicateVertex(_))));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"2","label":"alpha"}]}"#;
        let q = Quiver::from_json(text).unwrap();
        assert_eq!(q.arrows().len(), 1);
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
    }

    #[test]
    fn parallel_arrows_count_as_edges() {
        let q = Quiver::new(&["1", "2"], &[("1", "2", "a"), ("1", "2", "b")]).unwrap();
        assert_eq!(q.edge_count(0, 1), 2);
        assert_eq!(q.all_topological_orders(), vec![vec![0, 1]]);
    }
}
