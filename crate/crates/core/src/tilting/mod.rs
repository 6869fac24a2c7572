//! Silting and tilting certificates for `M(w) = ⊕ M^i`, the endomorphism
//! algebras `A(w)` and `A̲`, and the supporting numerical checks.

mod certify;
mod end;
mod lemmas;
mod report;

pub use certify::{
    certify_silting, certify_tilting, conditions, ext_nonneg_shifts, Certificate, Conditions, ExtEntry, HomWitness, SiltingReport, TiltingReport, Verdict,
};
pub use end::{EndAlgebra, EndArrow, QuiverComparison, Shifts};
pub use lemmas::{
    degree_zero_kernels, dual_route_agrees, ext_routes_agree, serre_pairing, verify_end_resolution, verify_hom_ideal_iso, verify_projfac,
    EndResolution, EndResolutionRow, HomIdealIso, ProjFac, RouteMismatch, SerreMismatch,
};
pub use report::{end_summary, full_report, EndSummary, FullReport, LemmaSummary};

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::Error;
use crate::linalg::Field;
use crate::modules::{Algebra, Module, Presentation};
use crate::preprojective::Piw;

/// Modules above this dimension are not presented by default.
pub const DEFAULT_BUDGET: usize = 1000;

/// `Π(w)` with the summands `M^i`, their presentations and lazily computed
/// syzygies.
pub struct WordModules<F: Field> {
    piw: Piw<F>,
    modules: Vec<Module<F>>,
    presentations: Vec<Presentation<F>>,
    last: BTreeSet<usize>,
    depth: usize,
    budget: usize,
    /// `syzygies[i - 1][k - 1]` presents `Ω^k M^i`.
    syzygies: Vec<Vec<OnceLock<Result<Presentation<F>, Error>>>>,
}

impl<F: Field> WordModules<F> {
    /// `depth` bounds the syzygies that will be requested.
    pub fn new(piw: Piw<F>, depth: usize) -> Result<Self, Error> {
        Self::with_budget(piw, depth, DEFAULT_BUDGET)
    }

    /// Syzygies of dimension above `budget` are refused with a size error.
    pub fn with_budget(piw: Piw<F>, depth: usize, budget: usize) -> Result<Self, Error> {
        let l = piw.len();
        let mut modules = Vec::with_capacity(l);
        let mut presentations = Vec::with_capacity(l);
        for i in 1..=l {
            let m = piw.module_m(i)?;
            presentations.push(Presentation::new(piw.algebra(), &m)?);
            modules.push(m);
        }
        let last = piw.last_occurrences();
        Ok(WordModules {
            piw,
            modules,
            presentations,
            last,
            depth,
            budget,
            syzygies: (0..l).map(|_| (0..depth).map(|_| OnceLock::new()).collect()).collect(),
        })
    }

    pub fn piw(&self) -> &Piw<F> {
        &self.piw
    }

    pub fn field(&self) -> &F {
        self.piw.field()
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.piw.algebra()
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// `M^i`, 1-based.
    pub fn module(&self, i: usize) -> &Module<F> {
        &self.modules[i - 1]
    }

    pub fn presentation(&self, i: usize) -> &Presentation<F> {
        &self.presentations[i - 1]
    }

    /// The positions `p_u`; their summands are the projectives `Π(w)e_u`.
    pub fn last(&self) -> &BTreeSet<usize> {
        &self.last
    }

    pub fn is_last(&self, i: usize) -> bool {
        self.last.contains(&i)
    }

    pub fn positions(&self) -> Vec<usize> {
        (1..=self.len()).collect()
    }

    pub fn non_last(&self) -> Vec<usize> {
        (1..=self.len()).filter(|i| !self.is_last(*i)).collect()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Presentation of `Ω^k M^i`.
    pub fn omega(&self, i: usize, k: usize) -> Result<&Presentation<F>, Error> {
        assert!(k <= self.depth, "syzygy depth {k} beyond {}", self.depth);
        if k == 0 {
            return Ok(&self.presentations[i - 1]);
        }
        let got = self.syzygies[i - 1][k - 1].get_or_init(|| {
            let m = &self.omega(i, k - 1)?.syzygy;
            if m.total_dim() > self.budget {
                return Err(Error::SizeCap {
                    dim: m.total_dim(),
                    budget: self.budget,
                });
            }
            Presentation::new(self.algebra(), m)
        });
        got.as_ref().map_err(Clone::clone)
    }

    /// `omega`, with `None` when the size budget is exceeded.
    pub fn omega_within_budget(&self, i: usize, k: usize) -> Result<Option<&Presentation<F>>, Error> {
        match self.omega(i, k) {
            Ok(p) => Ok(Some(p)),
            Err(Error::SizeCap { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }
}
