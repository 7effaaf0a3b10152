//! Hamiltonian vector fields `X_π = [·, π̂]` and the exponential flow of
//! `μ̂ + φ̂`.

use crate::algebra::{intertwiner_check, LinearMap};
use crate::error::Result;
use crate::gerstenhaber::{g_bracket, MultiMap};
use crate::operators::{lift_phi, lift_pi, theta, OperatorInstance};
use crate::structures::induced_product;
use crate::tensor::tuples;
use crate::verdict::{first_failure, Verdict};

/// `X_π(Θ) = [Θ, π̂]`.
pub fn hamiltonian_field(theta: &MultiMap, inst: &OperatorInstance) -> Result<MultiMap> {
    g_bracket(theta, &lift_pi(inst))
}

/// The terms of `exp(X_π)(μ̂ + φ̂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    /// `Θ = μ̂ + φ̂`.
    pub theta: MultiMap,
    /// `X_π(Θ) = [Θ, π̂]`.
    pub first: MultiMap,
    /// `½X_π²(Θ)`.
    pub second: MultiMap,
    /// `(1/6)X_π³(Θ)`.
    pub third: MultiMap,
    /// `X_π⁴(Θ)`, which vanishes because `π̂∘π̂ = 0`.
    pub fourth: MultiMap,
    /// `Θ + X_π(Θ) + ½X_π²(Θ) + (1/6)X_π³(Θ)`.
    pub sum: MultiMap,
}

/// Computes the flow term by term. Needs `1/6`, so characteristic 0 or `p > 3`.
pub fn exp_flow(inst: &OperatorInstance) -> Result<FlowResult> {
    let f = inst.field();
    f.require_inverses_up_to(3, "the exponential flow")?;
    let pi = lift_pi(inst);
    let theta = theta(inst)?;
    let x1 = g_bracket(&theta, &pi)?;
    let x2 = g_bracket(&x1, &pi)?;
    let x3 = g_bracket(&x2, &pi)?;
    let fourth = g_bracket(&x3, &pi)?;
    let second = x2.scale(&f.from_ratio(1, 2)?);
    let third = x3.scale(&f.from_ratio(1, 6)?);
    let sum = theta.add(&x1)?.add(&second)?.add(&third)?;
    Ok(FlowResult { theta, first: x1, second, third, fourth, sum })
}

/// `1 + π̂` as a linear endomorphism of `A ⊕ M`.
pub fn one_plus_pi_hat(inst: &OperatorInstance) -> Result<LinearMap> {
    let n = inst.sum().dim();
    LinearMap::new(lift_pi(inst).tensor().clone())?.add(&LinearMap::identity(inst.field(), n))
}

/// `(1 + π̂)(flow(x, y)) = Θ((1 + π̂)x, (1 + π̂)y)` on basis pairs.
pub fn flow_intertwiner(inst: &OperatorInstance, flow: &FlowResult) -> Result<Verdict> {
    intertwiner_check(&one_plus_pi_hat(inst)?, flow.sum.tensor(), flow.theta.tensor())
}

/// Outcome of [`addexp_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddexpReport {
    pub flow: FlowResult,
    /// `Θ + [Θ, π̂] + ½[[φ̂, π̂], π̂]`.
    pub truncation: MultiMap,
    /// Whether the flow equals the truncation.
    pub equal: bool,
    /// When `equal`, whether the truncation on pairs from `M` is `(0, m×n)`.
    pub restriction: Option<Verdict>,
}

impl AddexpReport {
    pub fn holds(&self) -> bool {
        self.equal && self.restriction.as_ref().is_some_and(Verdict::holds)
    }
}

/// Compares the flow with its three-term truncation, and on equality checks
/// that it restricts on `M` to the induced product
/// `m×n = π(m)·n + m·π(n) + φ(π(m), π(n))`.
pub fn addexp_check(inst: &OperatorInstance) -> Result<AddexpReport> {
    let flow = exp_flow(inst)?;
    let f = inst.field();
    let mut truncation = flow.theta.add(&flow.first)?;
    if inst.phi().is_some() {
        let pi = lift_pi(inst);
        let phi_term = g_bracket(&g_bracket(&lift_phi(inst)?, &pi)?, &pi)?;
        truncation = truncation.add(&phi_term.scale(&f.from_ratio(1, 2)?))?;
    }
    let equal = flow.sum == truncation;
    let restriction = equal.then(|| {
        let sum = inst.sum();
        let times = induced_product(inst);
        let dm = sum.m;
        Verdict::from_option(first_failure("flow on (m, n) = (0, m×n)", tuples(&[dm, dm]), |t| {
            let lhs = truncation.image(&[sum.m_index(t[0]), sum.m_index(t[1])]).to_vec();
            let rhs = sum.join(&vec![f.zero(); sum.a], times.image(t));
            (lhs, rhs)
        }))
    });
    Ok(AddexpReport { flow, truncation, equal, restriction })
}
