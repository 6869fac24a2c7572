//! Everything known about one word, as a serializable report.

use serde::Serialize;

use super::certify::{certify_tilting, TiltingReport, GLDIM_CAP};
use super::end::{EndAlgebra, EndArrow, QuiverComparison, Shifts};
use super::lemmas::{verify_end_resolution, verify_hom_ideal_iso, verify_projfac, EndResolution, HomIdealIso, ProjFac};
use super::WordModules;
use crate::error::Error;
use crate::linalg::Field;
use crate::modules::GlobalDimension;
use crate::qw::underline_qw;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndSummary {
    /// `dim A(w)`, degree-0 maps between all summands.
    pub dim: usize,
    /// `dim A̲`.
    pub stable_dim: usize,
    /// Quiver of `A̲`.
    pub quiver: Vec<EndArrow>,
    /// Quiver of the graded stable endomorphism algebra over every shift.
    pub graded_quiver: Vec<EndArrow>,
    pub graded_negative_dim: usize,
    /// `graded_quiver` against `underline Q(w)`.
    pub comparison: QuiverComparison,
    /// `gl.dim A̲`, `None` beyond the cap.
    pub gldim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    pub projfac: ProjFac,
    pub hom_ideal_iso: Vec<HomIdealIso>,
    pub end_resolution: EndResolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullReport {
    #[serde(flatten)]
    pub tilting: TiltingReport,
    pub end: EndSummary,
    pub lemmas: LemmaSummary,
}

pub fn end_summary<F: Field>(ctx: &WordModules<F>) -> Result<EndSummary, Error> {
    let piw = ctx.piw();
    let full = EndAlgebra::new(ctx, &ctx.positions(), false, Shifts::Zero);
    let non_last = ctx.non_last();
    let stable = EndAlgebra::new(ctx, &non_last, true, Shifts::Zero);
    let graded = EndAlgebra::new(ctx, &non_last, true, Shifts::All);
    let under = underline_qw(piw.quiver(), piw.word())?;
    let gldim = match stable.global_dimension(GLDIM_CAP)? {
        GlobalDimension::Exact(d) => Some(d),
        GlobalDimension::AtLeast(_) => None,
    };
    Ok(EndSummary {
        dim: full.dim(),
        stable_dim: stable.dim(),
        quiver: stable.quiver(),
        graded_quiver: graded.quiver(),
        graded_negative_dim: graded.negative_dim(),
        comparison: graded.compare_quiver(&under),
        gldim,
    })
}

/// Tilting report, endomorphism algebras and the lemma checks in one pass.
pub fn full_report<F: Field>(ctx: &WordModules<F>, ext_window: usize, omega_window: usize) -> Result<FullReport, Error> {
    let tilting = certify_tilting(ctx, ext_window, omega_window)?;
    let end = end_summary(ctx)?;
    let l = ctx.len();
    let mut isos = Vec::new();
    for m in 1..=l {
        for k in 1..=m {
            isos.push(verify_hom_ideal_iso(ctx.piw(), k, m)?);
        }
    }
    let lemmas = LemmaSummary {
        projfac: verify_projfac(ctx)?,
        hom_ideal_iso: isos,
        end_resolution: verify_end_resolution(ctx)?,
    };
    Ok(FullReport { tilting, end, lemmas })
}
