/// `(verb, core operation, identity checked or computed)`.
pub const VERBS: &[(&str, &str, &str)] = &[
    ("check-assoc", "algebra::assoc_check", "(eᵢeⱼ)eₖ = eᵢ(eⱼeₖ) on all basis triples"),
    (
        "check-bimodule",
        "algebra::bimodule_check",
        "(ab)·m = a·(b·m), (a·m)·b = a·(m·b), (m·a)·b = m·(ab) on all basis triples",
    ),
    ("check-grb", "operators::is_grb", "π(m)π(n) = π(π(m)·n + m·π(n)) for π: M → A"),
    ("check-trb", "operators::is_trb", "π(m)π(n) = π(π(m)·n + m·π(n) + φ(π(m), π(n))) for a Hochschild 2-cocycle φ"),
    ("check-reynolds", "operators::is_reynolds", "R(a)R(b) = R(R(a)b + aR(b) − R(a)R(b))"),
    ("check-nijenhuis", "operators::is_nijenhuis", "N(x)N(y) = N(N(x)y + xN(y)) − N²(xy)"),
    (
        "check-dendriform",
        "structures::check_dendriform",
        "(x≺y)≺z = x≺(y≻z + y≺z), (x≻y)≺z = x≻(y≺z), x≻(y≻z) = (x≻y + x≺y)≻z; total product associative",
    ),
    (
        "check-ns",
        "structures::check_ns",
        "the four NS axioms for ≻, ≺, ∨ with x×y = x≻y + x≺y + x∨y; total product associative",
    ),
    (
        "check-addexp",
        "flows::addexp_check",
        "exp(X_π)(μ̂ + φ̂) = μ̂ + φ̂ + [μ̂ + φ̂, π̂] + ½[[φ̂, π̂], π̂], restricting on M to (0, m×n)",
    ),
    (
        "residual",
        "operators::structure_residual",
        "½[π̂, π̂]_μ̂ + (1/6)[[[φ̂, π̂], π̂], π̂] = 0, with π̂φ̂(π̂⊗π̂) = −(1/6)[[[φ̂, π̂], π̂], π̂]",
    ),
    ("bracket", "gerstenhaber::g_bracket", "[f, g] = f∘̄g − (−1)^{(m−1)(n−1)} g∘̄f, or [[μ, f], g] with --mu"),
    (
        "flow",
        "flows::exp_flow",
        "Θ + X(Θ) + ½X²(Θ) + (1/6)X³(Θ) for Θ = μ̂ + φ̂ and X = [·, π̂], with X⁴(Θ) = 0 and (1 + π̂) an isomorphism onto Θ",
    ),
    ("derive-dendriform", "structures::dendriform_from_grb", "m≻n = π(m)·n, m≺n = m·π(n)"),
    (
        "derive-ns",
        "structures::ns_from_trb",
        "m≻n = π(m)·n, m≺n = m·π(n), m∨n = φ(π(m), π(n)); with --nijenhuis x≻y = N(x)y, x≺y = xN(y), x∨y = −N(xy)",
    ),
    ("search", "operators::search::search_operators", "every map over 𝔽_p satisfying the chosen identity"),
    (
        "aybe",
        "operators::aybe_residual",
        "r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃ = 0; a skew solution r gives r̃: A* → A, a generalized Rota-Baxter operator",
    ),
    ("catalog", "instances", "named instances and their designated checks; truncations are verified on a window"),
    ("explain", "-", "prints what a verb checks"),
];

pub fn explain(verb: &str) -> Option<String> {
    VERBS
        .iter()
        .find(|(v, _, _)| *v == verb)
        .map(|(v, op, identity)| format!("{v}: {identity}\n  implemented by rbx_core::{op}"))
}
