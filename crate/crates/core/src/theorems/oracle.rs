use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::FamilySpec;

/// Closed-form chromatic index and stability index of a family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyOracle {
    pub spec: String,
    pub expected_chi_prime: usize,
    pub expected_es: usize,
}

fn no_closed_form(spec: &FamilySpec) -> Error {
    Error::NoClosedForm(spec.to_string())
}

pub fn oracle_es(spec: &FamilySpec) -> Result<usize> {
    Ok(family_oracle(spec)?.expected_es)
}

pub fn oracle_chi_prime(spec: &FamilySpec) -> Result<usize> {
    Ok(family_oracle(spec)?.expected_chi_prime)
}

pub fn family_oracle(spec: &FamilySpec) -> Result<FamilyOracle> {
    let (chi, es) = match *spec {
        FamilySpec::Path(2) => (1, 1),
        FamilySpec::Path(n) if n >= 3 => (2, (n - 1) / 2),
        FamilySpec::Cycle(n) if n >= 3 && n % 2 == 1 => (3, 1),
        FamilySpec::Cycle(n) if n >= 4 => (2, n / 2),
        FamilySpec::Complete(n) if n >= 2 => (if n % 2 == 0 { n - 1 } else { n }, n / 2),
        FamilySpec::CompleteBipartite(a, b) if a >= 1 && b >= 1 => (a.max(b), a.min(b)),
        // Odd order, one vertex pair short of complete: overfull.
        FamilySpec::CompleteMinusEdge(n) if n >= 5 && n % 2 == 1 => (n, (n - 3) / 2),
        FamilySpec::CompMatchingsPlusClaw(n) if n >= 5 && n % 2 == 1 => (n - 1, (n - 3) / 2),
        FamilySpec::TwoHamiltonian(n) if n >= 5 && n % 2 == 1 => (5, 2),
        _ => return Err(no_closed_form(spec)),
    };
    Ok(FamilyOracle {
        spec: spec.to_string(),
        expected_chi_prime: chi,
        expected_es: es,
    })
}
