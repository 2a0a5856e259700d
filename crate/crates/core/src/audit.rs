//! Entry-by-entry comparison of the solver with the independent oracles.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Result;
use crate::exec::Execution;
use crate::lattice::{AlgebraContext, DominantWeight};
use crate::oracle::{dominant_weights_up_to, freudenthal, kostka_multiplicity};
use crate::poly::Monomial;
use crate::schur::SchurContext;
use crate::solver::solve_multiplicities_with;
use crate::weyl::weyl_character_u;

/// One weight of `Sub(Q lambda_1)` seen by all four routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub weight: DominantWeight,
    pub solver: u64,
    pub freudenthal: u64,
    pub kostka: u64,
    /// Coefficient of `u^mu` in `A(rho + Lambda) / A(rho)`.
    pub alternant: u64,
}

impl AuditRow {
    pub fn agrees(&self) -> bool {
        self.solver == self.freudenthal && self.solver == self.kostka && self.solver == self.alternant
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub highest_weight: DominantWeight,
    pub rows: Vec<AuditRow>,
}

impl AuditReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(AuditRow::agrees)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &AuditRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }
}

pub fn audit_weight(hw: &DominantWeight, sctx: &SchurContext) -> Result<AuditReport> {
    audit_weight_with(Execution::Sequential, hw, sctx)
}

pub fn audit_weight_with(exec: Execution, hw: &DominantWeight, sctx: &SchurContext) -> Result<AuditReport> {
    let table = solve_multiplicities_with(exec, hw, sctx)?;
    let fr = freudenthal(hw);
    let ch = weyl_character_u(hw)?;
    let n = hw.ctx().n();
    let mut rows = Vec::with_capacity(table.entries.len());
    for e in &table.entries {
        let coeff = ch.coeff(&Monomial::new(e.partition.padded(n)));
        rows.push(AuditRow {
            weight: e.weight.clone(),
            solver: e.multiplicity,
            freudenthal: fr.dominant(&e.weight),
            kostka: kostka_multiplicity(hw, &e.weight)?,
            alternant: to_count(&coeff),
        });
    }
    Ok(AuditReport { highest_weight: hw.clone(), rows })
}

fn to_count(c: &BigInt) -> u64 {
    // A negative coefficient can only come from a broken alternant; make it
    // show up as a mismatch rather than a panic.
    c.to_u64().unwrap_or(u64::MAX)
}

/// Audits every dominant weight of height at most `max_height` for each rank
/// in `ranks` (given as N). Work items are independent and run under `exec`.
pub fn audit_sweep(exec: Execution, max_height: u32, ranks: &[usize]) -> Result<Vec<AuditReport>> {
    let mut jobs = Vec::new();
    for &n in ranks {
        let ctx = AlgebraContext::new(n)?;
        let sctx = Arc::new(SchurContext::new(ctx));
        for w in dominant_weights_up_to(max_height, ctx) {
            jobs.push((w, Arc::clone(&sctx)));
        }
    }
    exec.try_map(&jobs, |(w, sctx)| audit_weight(w, sctx))
}
