//! Closed-form ordinal values for infinite graph families, and membership tests for the
//! class of tree CR-ordinals and the conjectured class of all CR-ordinals.

use std::fmt;

use thiserror::Error;

use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("S-family index must be at least 1")]
    ZeroIndex,
    #[error("Polat parameters must be positive (got i={i}, j={j})")]
    BadPolat { i: u64, j: u64 },
    #[error("T_omega vertex x({i},{j}) needs 0 < j <= i")]
    BadVertex { i: u64, j: u64 },
    #[error("{0}")]
    Contract(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// The rooted tree `S_α`, `α ≥ 1`.
    S(Ordinal),
    /// One path of every finite length hung from a common root.
    TOmega,
    /// Polat graph with a tail (`j = 1`) or a sum of such graphs (`j ≥ 2`).
    PolatGeneralized { i: u64, j: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// `None` where no closed form is known for the family member.
    pub eta: Option<Ordinal>,
    pub rho: Ordinal,
    pub theta: Option<String>,
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.eta {
            Some(e) => writeln!(f, "eta: {e}")?,
            None => writeln!(f, "eta: unknown")?,
        }
        writeln!(f, "rho: {}", self.rho)?;
        match &self.theta {
            Some(t) => writeln!(f, "theta: {t}"),
            None => writeln!(f, "theta: unknown"),
        }
    }
}

/// `η(S_α)`: 0 for `α = 1`, `β` for `α = β + 1`, `α` for limit `α`.
pub fn eta_of_s(alpha: &Ordinal) -> Result<Ordinal, SymbolicError> {
    if alpha.is_zero() {
        return Err(SymbolicError::ZeroIndex);
    }
    Ok(alpha.predecessor().unwrap_or_else(|| alpha.clone()))
}

/// `ρ(S_α)`: the diameter `2n - 1` for finite `α = n + 1`, else `η(S_α) + ω`.
pub fn rho_of_s(alpha: &Ordinal) -> Result<Ordinal, SymbolicError> {
    let eta = eta_of_s(alpha)?;
    Ok(match eta.as_finite() {
        Some(0) => Ordinal::zero(),
        Some(n) => Ordinal::finite(2 * n - 1),
        None => eta.add(&Ordinal::omega()),
    })
}

pub fn tomega_report() -> FamilyReport {
    let eta = Ordinal::omega();
    FamilyReport {
        rho: eta.add(&Ordinal::omega()),
        eta: Some(eta),
        theta: Some("r and all depth-1 vertices x_{i,1}".into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TOmegaVertex {
    Root,
    /// Depth `j` on the leg of length `i`.
    X {
        i: u64,
        j: u64,
    },
}

/// `η(v)` in `T_ω`: ω at the root, `ω + (j - 1)` at `x(i, j)`.
pub fn eta_tomega_vertex(v: TOmegaVertex) -> Result<Ordinal, SymbolicError> {
    match v {
        TOmegaVertex::Root => Ok(Ordinal::omega()),
        TOmegaVertex::X { i, j } if 0 < j && j <= i => {
            Ok(Ordinal::omega().add(&Ordinal::finite(j - 1)))
        }
        TOmegaVertex::X { i, j } => Err(SymbolicError::BadVertex { i, j }),
    }
}

/// CR-ordinal of the generalized Polat graphs: `ω + i` for `j = 1`, `ω·j + (i + j)` otherwise.
pub fn rho_polat_generalized(i: u64, j: u64) -> Result<Ordinal, SymbolicError> {
    if i == 0 || j == 0 {
        return Err(SymbolicError::BadPolat { i, j });
    }
    let finite = if j == 1 { i } else { i + j };
    Ok(Ordinal::omega_times(j).add(&Ordinal::finite(finite)))
}

pub fn family_report(spec: &FamilySpec) -> Result<FamilyReport, SymbolicError> {
    match spec {
        FamilySpec::S(alpha) => {
            let theta = if alpha.is_finite() {
                "the centre of the tree"
            } else {
                "contains the root r"
            };
            Ok(FamilyReport {
                eta: Some(eta_of_s(alpha)?),
                rho: rho_of_s(alpha)?,
                theta: Some(theta.into()),
            })
        }
        FamilySpec::TOmega => Ok(tomega_report()),
        &FamilySpec::PolatGeneralized { i, j } => {
            let rho = rho_polat_generalized(i, j)?;
            if (i, j) == (1, 1) {
                Ok(FamilyReport {
                    eta: Some(Ordinal::omega()),
                    rho,
                    theta: Some("X and z".into()),
                })
            } else {
                Ok(FamilyReport {
                    eta: None,
                    rho,
                    theta: None,
                })
            }
        }
    }
}

/// `α + ω` for a limit `α`: infinite, no finite part, last exponent exactly 1, at least `ω·2`.
fn is_limit_plus_omega(a: &Ordinal) -> bool {
    a.is_limit() && a.trailing_exponent() == Some(&Ordinal::one()) && *a >= Ordinal::omega_times(2)
}

/// Membership in the set of CR-ordinals of cop-win trees.
pub fn in_lambda_t(a: &Ordinal) -> bool {
    a.is_finite() || is_limit_plus_omega(a)
}

/// Membership in `{ω·i + (i + j)} ∪ {α + ω : α limit}`.
pub fn in_upsilon(a: &Ordinal) -> bool {
    if is_limit_plus_omega(a) {
        return true;
    }
    // below ω²: a = ω·i + k
    match a.terms() {
        [] => true,
        [t] if t.exp().is_zero() => true,
        [t] if *t.exp() == Ordinal::one() => false,
        [t, k] if *t.exp() == Ordinal::one() && k.exp().is_zero() => k.coeff() >= t.coeff(),
        _ => false,
    }
}

/// `ρ(T)` of a cop-win tree from `η(T)`: the diameter when the radius is finite, else `η + ω`.
pub fn tree_rho_from_eta(
    eta: &Ordinal,
    finite_radius: bool,
    diameter: Option<u64>,
) -> Result<Ordinal, SymbolicError> {
    match (finite_radius, diameter) {
        (true, Some(d)) => {
            let r = eta
                .as_finite()
                .ok_or_else(|| SymbolicError::Contract("finite radius needs finite eta".into()))?;
            if d < r || d > 2 * r {
                return Err(SymbolicError::Contract(format!(
                    "diameter {d} incompatible with radius {r}"
                )));
            }
            Ok(Ordinal::finite(d))
        }
        (true, None) => Err(SymbolicError::Contract(
            "finite radius needs a diameter".into(),
        )),
        (false, _) if eta.is_finite() => Err(SymbolicError::Contract(
            "infinite radius needs infinite eta".into(),
        )),
        (false, _) => Ok(eta.add(&Ordinal::omega())),
    }
}
