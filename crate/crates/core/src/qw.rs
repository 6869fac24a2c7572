//! The quiver `Q(w)` of a reduced word, its grading, `underline Q(w)`, and
//! deg-acyclicity.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::coxeter::{CoxeterContext, Quiver, Word};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    /// Between consecutive vertices of one type, pointing left.
    Left,
    Q,
    Qstar,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct QwArrow {
    pub from: usize,
    pub to: usize,
    pub kind: ArrowKind,
    pub deg: u8,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QwVertex {
    /// Position in the word, starting at 1.
    pub id: usize,
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip)]
    pub vertex: usize,
}

/// A quiver on word positions with a degree on every arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QwQuiver {
    pub vertices: Vec<QwVertex>,
    pub arrows: Vec<QwArrow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegAcyclic {
    /// Vertices listed as `1, 2, …, l` of an order with `deg 0 ⇒ target < source`
    /// and `deg 1 ⇒ source < target`.
    Order(Vec<usize>),
    /// A cycle of `Q*`, closing back at its first vertex.
    Cycle(Vec<usize>),
}

impl DegAcyclic {
    pub fn holds(&self) -> bool {
        matches!(self, DegAcyclic::Order(_))
    }
}

/// `Q(w)` by the three arrow rules.
pub fn build_qw(q: &Quiver, w: &Word) -> Result<QwQuiver, Error> {
    CoxeterContext::new(q.clone()).require_reduced(w)?;
    let l = w.len();
    let letters = w.letters();
    let vertices = (1..=l)
        .map(|i| QwVertex {
            id: i,
            kind: q.name(letters[i - 1]).to_string(),
            vertex: letters[i - 1],
        })
        .collect();
    // next occurrence of the same letter after position i (1-based), or l + 1
    let next_same = |i: usize| (i + 1..=l).find(|&j| letters[j - 1] == letters[i - 1]).unwrap_or(l + 1);
    let mut arrows = Vec::new();
    for j in 1..=l {
        if let Some(i) = (1..j).rev().find(|&i| letters[i - 1] == letters[j - 1]) {
            arrows.push(QwArrow {
                from: j,
                to: i,
                kind: ArrowKind::Left,
                deg: 0,
                label: format!("l{j}"),
            });
        }
    }
    for a in q.arrows() {
        for (src, dst, kind) in [(a.from, a.to, ArrowKind::Q), (a.to, a.from, ArrowKind::Qstar)] {
            for i in (1..=l).filter(|&i| letters[i - 1] == src) {
                let stop = next_same(i);
                if let Some(j) = (i + 1..stop).rev().find(|&j| letters[j - 1] == dst) {
                    let (deg, label) = match kind {
                        ArrowKind::Q => (0, format!("{}_{i}", a.label)),
                        _ => (1, format!("{}*_{i}", a.label)),
                    };
                    arrows.push(QwArrow {
                        from: i,
                        to: j,
                        kind,
                        deg,
                        label,
                    });
                }
            }
        }
    }
    arrows.sort();
    Ok(QwQuiver { vertices, arrows })
}

/// `Q(w)` without the last occurrences `p_u`.
pub fn underline_qw(q: &Quiver, w: &Word) -> Result<QwQuiver, Error> {
    let full = build_qw(q, w)?;
    let last = w.stats(q).last_positions();
    Ok(full.without(&last))
}

impl QwQuiver {
    /// Full subquiver on the vertices not in `drop`.
    pub fn without(&self, drop: &BTreeSet<usize>) -> QwQuiver {
        QwQuiver {
            vertices: self.vertices.iter().filter(|v| !drop.contains(&v.id)).cloned().collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| !drop.contains(&a.from) && !drop.contains(&a.to))
                .cloned()
                .collect(),
        }
    }

    pub fn ids(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.id).collect()
    }

    /// Arrows of `Q*`: degree 0 arrows as they are, degree 1 arrows reversed.
    pub fn star_quiver(&self) -> Vec<(usize, usize)> {
        self.arrows
            .iter()
            .map(|a| if a.deg == 1 { (a.to, a.from) } else { (a.from, a.to) })
            .collect()
    }

    pub fn is_deg_acyclic(&self) -> DegAcyclic {
        let ids = self.ids();
        let pos = |id: usize| ids.iter().position(|&x| x == id).expect("arrow endpoint is a vertex");
        let n = ids.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, t) in self.star_quiver() {
            out[pos(s)].push(pos(t));
        }
        // 0 unvisited, 1 on stack, 2 done
        let mut state = vec![0u8; n];
        let mut finished = Vec::with_capacity(n);
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            state[root] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&t) = out[v].get(*next) {
                    *next += 1;
                    match state[t] {
                        0 => {
                            state[t] = 1;
                            stack.push((t, 0));
                        }
                        1 => {
                            let start = stack.iter().position(|&(x, _)| x == t).unwrap();
                            let mut cycle: Vec<usize> = stack[start..].iter().map(|&(x, _)| ids[x]).collect();
                            cycle.push(ids[t]);
                            return DegAcyclic::Cycle(cycle);
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    finished.push(ids[v]);
                    stack.pop();
                }
            }
        }
        // sinks of Q* finish first, and every Q* arrow must point down the order
        DegAcyclic::Order(finished)
    }

    /// Whether `order` (listed from smallest) satisfies the degree condition.
    pub fn order_is_valid(&self, order: &[usize]) -> bool {
        let rank = |id: usize| order.iter().position(|&x| x == id);
        if order.len() != self.vertices.len() {
            return false;
        }
        self.arrows.iter().all(|a| match (rank(a.from), rank(a.to)) {
            (Some(s), Some(t)) => {
                if a.deg == 0 {
                    t < s
                } else {
                    s < t
                }
            }
            _ => false,
        })
    }

    /// Whether `cycle` is a closed walk of `Q*`.
    pub fn cycle_is_valid(&self, cycle: &[usize]) -> bool {
        let star = self.star_quiver();
        cycle.len() >= 2
            && cycle.first() == cycle.last()
            && cycle.windows(2).all(|p| star.contains(&(p[0], p[1])))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{name}\" {{").unwrap();
        for v in &self.vertices {
            writeln!(s, "  {} [label=\"{}:{}\"];", v.id, v.id, v.kind).unwrap();
        }
        for a in &self.arrows {
            let kind = match a.kind {
                ArrowKind::Left => "left",
                ArrowKind::Q => "Q",
                ArrowKind::Qstar => "Qstar",
            };
            let style = if a.deg == 1 { ", style=dashed" } else { "" };
            writeln!(s, "  {} -> {} [label=\"{} {kind} deg={}\"{style}];", a.from, a.to, a.label, a.deg).unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}
