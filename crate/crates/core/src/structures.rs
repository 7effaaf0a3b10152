//! Dendriform and NS-algebras, the structures induced by (twisted)
//! Rota-Baxter operators, and the passage back to operators.

use crate::algebra::{assoc_check, Algebra, Bimodule, LinearMap};
use crate::cochains::Cochain;
use crate::error::{input, Error, Result};
use crate::operators::{check_operator, is_grb, OperatorInstance};
use crate::scalar::{Field, Scalar};
use crate::tensor::{add_vec, basis_vector, sub_vec, tuples, MultiLinear};
use crate::verdict::{first_failure, Verdict};

fn check_products(dim: usize, field: Field, products: &[&MultiLinear]) -> Result<()> {
    for p in products {
        if p.input_dims() != [dim, dim] || p.output_dim() != dim {
            return input(format!("products must have shape {dim}×{dim}→{dim}"));
        }
        if p.field() != field {
            return input("products are over different fields");
        }
    }
    Ok(())
}

/// Two products `≻`, `≺` on one space. Construction checks shapes only; use
/// [`check_dendriform`] for the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dendriform {
    succ: MultiLinear,
    prec: MultiLinear,
}

impl Dendriform {
    pub fn new(succ: MultiLinear, prec: MultiLinear) -> Result<Self> {
        check_products(succ.output_dim(), succ.field(), &[&succ, &prec])?;
        Ok(Dendriform { succ, prec })
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        let z = MultiLinear::zeros(field, &[dim, dim], dim);
        Dendriform { succ: z.clone(), prec: z }
    }

    pub fn dim(&self) -> usize {
        self.succ.output_dim()
    }

    pub fn field(&self) -> Field {
        self.succ.field()
    }

    pub fn succ(&self) -> &MultiLinear {
        &self.succ
    }

    pub fn prec(&self) -> &MultiLinear {
        &self.prec
    }

    /// `xy = x≻y + x≺y`, unchecked.
    pub fn sum(&self) -> MultiLinear {
        self.succ.try_add(&self.prec).expect("shapes agree")
    }

    /// The associative algebra `E_ass`; the axioms must hold.
    pub fn total_product(&self) -> Result<Algebra> {
        require(check_dendriform(self), "dendriform axioms")?;
        Algebra::new(self.sum())
    }

    /// The identity map `E → E_ass`, a GRB operator for the module
    /// `e·x = e≻x`, `x·e = x≺e`.
    pub fn identity_operator(&self) -> Result<OperatorInstance> {
        let algebra = self.total_product()?;
        let module = Bimodule::new(&algebra, self.succ.clone(), self.prec.clone())?;
        OperatorInstance::new(algebra, module, LinearMap::identity(self.field(), self.dim()), None)
    }

    /// `NS` view with `∨ = 0`.
    pub fn to_ns(&self) -> NsAlgebra {
        NsAlgebra {
            succ: self.succ.clone(),
            prec: self.prec.clone(),
            vee: MultiLinear::zeros(self.field(), &[self.dim(), self.dim()], self.dim()),
        }
    }
}

/// Three products `≻`, `≺`, `∨` on one space. Construction checks shapes only;
/// use [`check_ns`] for the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsAlgebra {
    succ: MultiLinear,
    prec: MultiLinear,
    vee: MultiLinear,
}

impl NsAlgebra {
    pub fn new(succ: MultiLinear, prec: MultiLinear, vee: MultiLinear) -> Result<Self> {
        check_products(succ.output_dim(), succ.field(), &[&succ, &prec, &vee])?;
        Ok(NsAlgebra { succ, prec, vee })
    }

    pub fn dim(&self) -> usize {
        self.succ.output_dim()
    }

    pub fn field(&self) -> Field {
        self.succ.field()
    }

    pub fn succ(&self) -> &MultiLinear {
        &self.succ
    }

    pub fn prec(&self) -> &MultiLinear {
        &self.prec
    }

    pub fn vee(&self) -> &MultiLinear {
        &self.vee
    }

    /// `x×y = x≻y + x≺y + x∨y`, unchecked.
    pub fn times(&self) -> MultiLinear {
        self.succ.try_add(&self.prec).and_then(|s| s.try_add(&self.vee)).expect("shapes agree")
    }

    /// The associative algebra `T_ass`; the axioms must hold.
    pub fn total_product(&self) -> Result<Algebra> {
        require(check_ns(self), "NS axioms")?;
        Algebra::new(self.times())
    }

    /// `Φ(x, y) = x∨y` as a 2-cochain of `T_ass` with values in `T`.
    pub fn vee_cochain(&self) -> Result<(Algebra, Bimodule, Cochain)> {
        let algebra = self.total_product()?;
        let module = Bimodule::new(&algebra, self.succ.clone(), self.prec.clone())?;
        let phi = Cochain::new(&algebra, &module, self.vee.clone())?;
        Ok((algebra, module, phi))
    }

    /// The identity map `T → T_ass`, twisted Rota-Baxter for `Φ(x, y) = x∨y`.
    pub fn identity_operator(&self) -> Result<OperatorInstance> {
        let (algebra, module, phi) = self.vee_cochain()?;
        OperatorInstance::new(algebra, module, LinearMap::identity(self.field(), self.dim()), Some(phi))
    }
}

fn require(verdict: Verdict, what: &str) -> Result<()> {
    match verdict.witness() {
        None => Ok(()),
        Some(w) => Err(Error::Precondition(format!("{what} does not hold: {w}"))),
    }
}

/// Evaluates a bilinear product on two coordinate vectors.
fn op(p: &MultiLinear, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    p.apply(&[x, y])
}

/// Checks the three dendriform axioms on basis triples, reporting the first
/// failure of each violated axiom:
///
/// `(x≺y)≺z = x≺(y≻z + y≺z)`, `(x≻y)≺z = x≻(y≺z)`, `x≻(y≻z) = (x≻y + x≺y)≻z`.
pub fn check_dendriform(d: &Dendriform) -> Verdict {
    let (s, p) = (&d.succ, &d.prec);
    let n = d.dim();
    let total = d.sum();
    let mut v = Verdict::pass();
    v.failures.extend(first_failure("(x≺y)≺z = x≺(y≻z + y≺z)", tuples(&[n, n, n]), |t| {
        let z = basis_vector(d.field(), n, t[2]);
        let x = basis_vector(d.field(), n, t[0]);
        (op(p, p.image(&t[..2]), &z), op(p, &x, total.image(&t[1..])))
    }));
    v.failures.extend(first_failure("(x≻y)≺z = x≻(y≺z)", tuples(&[n, n, n]), |t| {
        let z = basis_vector(d.field(), n, t[2]);
        let x = basis_vector(d.field(), n, t[0]);
        (op(p, s.image(&t[..2]), &z), op(s, &x, p.image(&t[1..])))
    }));
    v.failures.extend(first_failure("x≻(y≻z) = (x≻y + x≺y)≻z", tuples(&[n, n, n]), |t| {
        let z = basis_vector(d.field(), n, t[2]);
        let x = basis_vector(d.field(), n, t[0]);
        (op(s, &x, s.image(&t[1..])), op(s, total.image(&t[..2]), &z))
    }));
    v
}

/// Checks the four NS axioms on basis triples, reporting the first failure of
/// each violated axiom. With `×` the sum of all three products:
///
/// - `(x≺y)≺z = x≺(y×z)`
/// - `(x≻y)≺z = x≻(y≺z)`
/// - `x≻(y≻z) = (x×y)≻z`
/// - `x≻(y∨z) − (x×y)∨z + x∨(y×z) − (x∨y)≺z = 0`
pub fn check_ns(t: &NsAlgebra) -> Verdict {
    let (s, p, w) = (&t.succ, &t.prec, &t.vee);
    let n = t.dim();
    let f = t.field();
    let times = t.times();
    let mut v = Verdict::pass();
    v.failures.extend(first_failure("(x≺y)≺z = x≺(y×z)", tuples(&[n, n, n]), |i| {
        let (x, z) = (basis_vector(f, n, i[0]), basis_vector(f, n, i[2]));
        (op(p, p.image(&i[..2]), &z), op(p, &x, times.image(&i[1..])))
    }));
    v.failures.extend(first_failure("(x≻y)≺z = x≻(y≺z)", tuples(&[n, n, n]), |i| {
        let (x, z) = (basis_vector(f, n, i[0]), basis_vector(f, n, i[2]));
        (op(p, s.image(&i[..2]), &z), op(s, &x, p.image(&i[1..])))
    }));
    v.failures.extend(first_failure("x≻(y≻z) = (x×y)≻z", tuples(&[n, n, n]), |i| {
        let (x, z) = (basis_vector(f, n, i[0]), basis_vector(f, n, i[2]));
        (op(s, &x, s.image(&i[1..])), op(s, times.image(&i[..2]), &z))
    }));
    v.failures.extend(first_failure(
        "x≻(y∨z) − (x×y)∨z + x∨(y×z) − (x∨y)≺z = 0",
        tuples(&[n, n, n]),
        |i| {
            let (x, z) = (basis_vector(f, n, i[0]), basis_vector(f, n, i[2]));
            let plus = add_vec(&op(s, &x, w.image(&i[1..])), &op(w, &x, times.image(&i[1..])));
            let minus = add_vec(&op(w, times.image(&i[..2]), &z), &op(p, w.image(&i[..2]), &z));
            (sub_vec(&plus, &minus), vec![f.zero(); n])
        },
    ));
    v
}

fn require_operator(inst: &OperatorInstance) -> Result<()> {
    require(check_operator(inst)?, "operator identity")
}

/// `m≻n = π(m)·n`, `m≺n = m·π(n)` for a GRB operator.
pub fn dendriform_from_grb(inst: &OperatorInstance) -> Result<Dendriform> {
    require(is_grb(inst)?, "generalized Rota-Baxter identity")?;
    let (succ, prec) = split_products(inst);
    Ok(Dendriform { succ, prec })
}

fn split_products(inst: &OperatorInstance) -> (MultiLinear, MultiLinear) {
    let (m, pi) = (inst.module(), inst.pi());
    let d = m.dim();
    let f = inst.field();
    let succ = MultiLinear::from_images(f, &[d, d], d, |t| m.act_left(pi.image(t[0]), &m.basis(t[1])));
    let prec = MultiLinear::from_images(f, &[d, d], d, |t| m.act_right(&m.basis(t[0]), pi.image(t[1])));
    (succ, prec)
}

/// `m≻n = π(m)·n`, `m≺n = m·π(n)`, `m∨n = φ(π(m), π(n))` for a twisted
/// Rota-Baxter operator. Without `φ` the instance must be GRB and `∨ = 0`.
pub fn ns_from_trb(inst: &OperatorInstance) -> Result<NsAlgebra> {
    require_operator(inst)?;
    let (succ, prec) = split_products(inst);
    let d = inst.module().dim();
    let f = inst.field();
    let pi = inst.pi();
    let vee = match inst.phi() {
        Some(phi) => MultiLinear::from_images(f, &[d, d], d, |t| phi.apply(&[pi.image(t[0]), pi.image(t[1])])),
        None => MultiLinear::zeros(f, &[d, d], d),
    };
    Ok(NsAlgebra { succ, prec, vee })
}

/// `x≻y = N(x)y`, `x≺y = xN(y)`, `x∨y = −N(xy)` for an associative Nijenhuis operator.
pub fn ns_from_nijenhuis(algebra: &Algebra, n: &LinearMap) -> Result<NsAlgebra> {
    require(crate::operators::is_nijenhuis(algebra, n)?, "Nijenhuis identity")?;
    let d = algebra.dim();
    let f = algebra.field();
    let succ = MultiLinear::from_images(f, &[d, d], d, |t| algebra.mul(n.image(t[0]), &algebra.basis(t[1])));
    let prec = MultiLinear::from_images(f, &[d, d], d, |t| algebra.mul(&algebra.basis(t[0]), n.image(t[1])));
    let vee = MultiLinear::from_images(f, &[d, d], d, |t| {
        n.apply(algebra.product().image(t)).into_iter().map(|s| -s).collect()
    });
    Ok(NsAlgebra { succ, prec, vee })
}

/// The product induced on `M`: `m×n = π(m)·n + m·π(n) + φ(π(m), π(n))`, unchecked.
pub fn induced_product(inst: &OperatorInstance) -> MultiLinear {
    let (succ, prec) = split_products(inst);
    let mut total = succ.try_add(&prec).expect("shapes agree");
    if let Some(phi) = inst.phi() {
        let pi = inst.pi();
        let d = inst.module().dim();
        let vee = MultiLinear::from_images(inst.field(), &[d, d], d, |t| phi.apply(&[pi.image(t[0]), pi.image(t[1])]));
        total = total.try_add(&vee).expect("shapes agree");
    }
    total
}

/// `M_ass`: the module with the induced associative product; the operator
/// identity must hold.
pub fn induced_algebra(inst: &OperatorInstance) -> Result<Algebra> {
    require_operator(inst)?;
    let product = induced_product(inst);
    if let Some(w) = assoc_check(&product)?.witness() {
        return Err(Error::Precondition(format!("induced product is not associative: {w}")));
    }
    Algebra::new(product)
}

/// `A` as an `M_ass`-bimodule through a GRB operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedActions {
    pub m_ass: Algebra,
    /// Left action `m·_π a = π(m)a − π(m·a)` and right action
    /// `a·_π m = aπ(m) − π(a·m)` on `A`.
    pub module: Bimodule,
}

impl InducedActions {
    pub fn left(&self) -> &MultiLinear {
        self.module.left()
    }

    pub fn right(&self) -> &MultiLinear {
        self.module.right()
    }
}

/// The `M_ass`-bimodule structure on `A` induced by a GRB operator.
pub fn induced_actions(inst: &OperatorInstance) -> Result<InducedActions> {
    require(is_grb(inst)?, "generalized Rota-Baxter identity")?;
    let m_ass = induced_algebra(inst)?;
    let (a, m, pi) = (inst.algebra(), inst.module(), inst.pi());
    let f = inst.field();
    let (da, dm) = (a.dim(), m.dim());
    let left = MultiLinear::from_images(f, &[dm, da], da, |t| {
        let eb = a.basis(t[1]);
        sub_vec(&a.mul(pi.image(t[0]), &eb), &pi.apply(&m.act_right(&m.basis(t[0]), &eb)))
    });
    let right = MultiLinear::from_images(f, &[da, dm], da, |t| {
        let ea = a.basis(t[0]);
        sub_vec(&a.mul(&ea, pi.image(t[1])), &pi.apply(&m.act_left(&ea, &m.basis(t[1]))))
    });
    let module = Bimodule::new(&m_ass, left, right)?;
    Ok(InducedActions { m_ass, module })
}

/// The product `(a,m) *_π (b,n) = (a·_π n + m·_π b, m×n)` on `A ⊕ M`,
/// assembled from the induced actions.
pub fn induced_extension_product(inst: &OperatorInstance) -> Result<MultiLinear> {
    let actions = induced_actions(inst)?;
    let sum = inst.sum();
    let f = inst.field();
    let n = sum.dim();
    Ok(MultiLinear::from_images(f, &[n, n], n, |t| {
        let x = basis_vector(f, n, t[0]);
        let y = basis_vector(f, n, t[1]);
        let (a, m) = sum.split(&x);
        let (b, nn) = sum.split(&y);
        let apart = add_vec(&actions.module.act_right(a, nn), &actions.module.act_left(m, b));
        let mpart = actions.m_ass.mul(m, nn);
        sum.join(&apart, &mpart)
    }))
}

/// Checks the hypotheses of derivation duality and returns `Ω: A → M_ass`
/// as a GRB operator on `A` with the induced actions.
///
/// Requires `π` GRB, `Ω(ab) = Ω(a)·b + a·Ω(b)` and `Ω∘π = z·id_M`.
pub fn derivation_dual(inst: &OperatorInstance, omega: &LinearMap, z: &Scalar) -> Result<OperatorInstance> {
    let (a, m, pi) = (inst.algebra(), inst.module(), inst.pi());
    crate::operators::check_map(omega, a.dim(), m.dim(), a.field(), "Ω: A → M")?;
    if !a.field().owns(z) {
        return input("z is over a different field");
    }
    require(is_grb(inst)?, "generalized Rota-Baxter identity")?;
    let da = a.dim();
    let derivation = first_failure("Ω(ab) = Ω(a)·b + a·Ω(b)", tuples(&[da, da]), |t| {
        let lhs = omega.apply(a.product().image(t));
        let rhs =
            add_vec(&m.act_right(omega.image(t[0]), &a.basis(t[1])), &m.act_left(&a.basis(t[0]), omega.image(t[1])));
        (lhs, rhs)
    });
    require(Verdict::from_option(derivation), "derivation property")?;
    let dm = m.dim();
    let inverse = first_failure("Ω(π(m)) = z·m", tuples(&[dm]), |t| {
        let rhs = m.basis(t[0]).iter().map(|s| s * z).collect();
        (omega.apply(pi.image(t[0])), rhs)
    });
    require(Verdict::from_option(inverse), "Ω∘π = z·id")?;
    let actions = induced_actions(inst)?;
    OperatorInstance::new(actions.m_ass, actions.module, omega.clone(), None)
}

/// Whether `(ψ₀, ψ₁)` is a morphism of GRB operators from `inst` to `target`:
/// `γ∘ψ₁ = ψ₀∘π`, `ψ₁(a·m) = ψ₀(a)·ψ₁(m)` and `ψ₁(m·a) = ψ₁(m)·ψ₀(a)`.
pub fn grb_morphism_check(
    psi0: &LinearMap,
    psi1: &LinearMap,
    inst: &OperatorInstance,
    target: &OperatorInstance,
) -> Result<Verdict> {
    let (a, m) = (inst.algebra(), inst.module());
    let (a2, m2) = (target.algebra(), target.module());
    crate::operators::check_map(psi0, a.dim(), a2.dim(), a.field(), "ψ₀: A → A′")?;
    crate::operators::check_map(psi1, m.dim(), m2.dim(), a.field(), "ψ₁: M → M′")?;
    let (da, dm) = (a.dim(), m.dim());
    let mut v = Verdict::pass();
    v.failures.extend(first_failure("γ∘ψ₁ = ψ₀∘π", tuples(&[dm]), |t| {
        (target.pi().apply(psi1.image(t[0])), psi0.apply(inst.pi().image(t[0])))
    }));
    v.failures.extend(first_failure("ψ₁(a·m) = ψ₀(a)·ψ₁(m)", tuples(&[da, dm]), |t| {
        (psi1.apply(m.left().image(t)), m2.act_left(psi0.image(t[0]), psi1.image(t[1])))
    }));
    v.failures.extend(first_failure("ψ₁(m·a) = ψ₁(m)·ψ₀(a)", tuples(&[dm, da]), |t| {
        (psi1.apply(m.right().image(t)), m2.act_right(psi1.image(t[0]), psi0.image(t[1])))
    }));
    Ok(v)
}

/// Whether `ψ` preserves both dendriform products.
pub fn dendriform_morphism_check(psi: &LinearMap, source: &Dendriform, target: &Dendriform) -> Result<Verdict> {
    crate::operators::check_map(psi, source.dim(), target.dim(), source.field(), "ψ")?;
    let n = source.dim();
    let mut v = Verdict::pass();
    for (label, p, q) in
        [("ψ(x≻y) = ψ(x)≻ψ(y)", &source.succ, &target.succ), ("ψ(x≺y) = ψ(x)≺ψ(y)", &source.prec, &target.prec)]
    {
        v.failures.extend(first_failure(label, tuples(&[n, n]), |t| {
            (psi.apply(p.image(t)), q.apply(&[psi.image(t[0]), psi.image(t[1])]))
        }));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gerstenhaber::g_bracket;
    use crate::operators::{lift_pi, mu_hat};

    fn dual_numbers(f: Field) -> Algebra {
        Algebra::from_constants(f, 2, |i, j, k| i64::from(i + j == k)).unwrap()
    }

    fn times_x_instance() -> OperatorInstance {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let pi = LinearMap::from_fn(q, 2, 2, |i, k| if i == 0 && k == 1 { q.one() } else { q.zero() });
        OperatorInstance::new(a.clone(), Bimodule::regular(&a), pi, None).unwrap()
    }

    #[test]
    fn dendriform_of_multiplication_by_x() {
        let q = Field::Rationals;
        let d = dendriform_from_grb(&times_x_instance()).unwrap();
        let e1 = vec![q.zero(), q.one()];
        let zero = vec![q.zero(), q.zero()];
        assert_eq!(d.succ().image(&[0, 0]), e1.as_slice());
        assert_eq!(d.succ().image(&[0, 1]), zero.as_slice());
        assert_eq!(d.succ().image(&[1, 0]), zero.as_slice());
        assert_eq!(d.succ().image(&[1, 1]), zero.as_slice());
        assert_eq!(d.prec().image(&[0, 0]), e1.as_slice());
        assert_eq!(d.prec().image(&[1, 0]), zero.as_slice());
        assert!(check_dendriform(&d).holds());
        assert!(d.total_product().is_ok());
    }

    #[test]
    fn zero_dendriform_round_trip() {
        let d = Dendriform::zero(Field::Rationals, 2);
        assert!(check_dendriform(&d).holds());
        let inst = d.identity_operator().unwrap();
        assert!(is_grb(&inst).unwrap().holds());
        assert_eq!(dendriform_from_grb(&inst).unwrap(), d);
    }

    #[test]
    fn gf_is_identity() {
        let d = dendriform_from_grb(&times_x_instance()).unwrap();
        let back = dendriform_from_grb(&d.identity_operator().unwrap()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn violated_dendriform_axioms_are_all_reported() {
        let q = Field::Rationals;
        let one = MultiLinear::from_fn(q, &[1, 1], 1, |_, _| q.one());
        let d = Dendriform::new(one.clone(), one).unwrap();
        // (x≺y)≺z = 1 vs x≺(y≻z + y≺z) = 2, and likewise for the third axiom.
        let v = check_dendriform(&d);
        let labels: Vec<&str> = v.failures.iter().map(|w| w.label.as_str()).collect();
        assert_eq!(labels, ["(x≺y)≺z = x≺(y≻z + y≺z)", "x≻(y≻z) = (x≻y + x≺y)≻z"]);
    }

    #[test]
    fn ns_with_zero_vee_matches_dendriform() {
        let d = dendriform_from_grb(&times_x_instance()).unwrap();
        assert!(check_ns(&d.to_ns()).holds());
        assert_eq!(ns_from_trb(&times_x_instance()).unwrap(), d.to_ns());
    }

    #[test]
    fn ns_from_identity_nijenhuis() {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let t = ns_from_nijenhuis(&a, &LinearMap::identity(q, 2)).unwrap();
        assert!(check_ns(&t).holds());
        let (alg, module, phi) = t.vee_cochain().unwrap();
        assert!(crate::cochains::is_cocycle(&alg, &module, &phi).unwrap().holds());
        assert!(crate::operators::is_trb(&t.identity_operator().unwrap()).unwrap().holds());
    }

    #[test]
    fn induced_extension_matches_bracket() {
        let inst = times_x_instance();
        let bracket = g_bracket(&mu_hat(&inst).unwrap(), &lift_pi(&inst)).unwrap();
        assert_eq!(bracket.tensor(), &induced_extension_product(&inst).unwrap());
    }

    #[test]
    fn zero_operator_has_zero_actions() {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let inst = OperatorInstance::new(a.clone(), Bimodule::regular(&a), LinearMap::zero(q, 2, 2), None).unwrap();
        let act = induced_actions(&inst).unwrap();
        assert!(act.left().is_zero() && act.right().is_zero());
    }

    #[test]
    fn identity_morphism() {
        let inst = times_x_instance();
        let id = LinearMap::identity(Field::Rationals, 2);
        assert!(grb_morphism_check(&id, &id, &inst, &inst).unwrap().holds());
        let zero = LinearMap::zero(Field::Rationals, 2, 2);
        assert!(grb_morphism_check(&zero, &zero, &inst, &inst).unwrap().holds());
    }

    #[test]
    fn non_grb_is_rejected() {
        let q = Field::Rationals;
        let a = dual_numbers(q);
        let inst = OperatorInstance::new(a.clone(), Bimodule::regular(&a), LinearMap::identity(q, 2), None).unwrap();
        assert!(matches!(dendriform_from_grb(&inst), Err(Error::Precondition(_))));
        assert!(matches!(induced_actions(&inst), Err(Error::Precondition(_))));
    }
}
