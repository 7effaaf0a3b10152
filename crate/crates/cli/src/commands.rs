use std::path::Path;

use rbx_core::algebra::{assoc_check, bimodule_check};
use rbx_core::flows::{addexp_check, exp_flow, flow_intertwiner};
use rbx_core::gerstenhaber::{derived_bracket, g_bracket, is_square_zero};
use rbx_core::instances::{self, TruncatedWeyl, ALGEBRAS, TRB_INSTANCES};
use rbx_core::operators::{
    aybe_residual, check_operator, is_grb, is_nijenhuis, is_reynolds, is_rota_baxter, is_trb, r_tilde,
    search_operators, structure_residual, SearchKind, Solution, DEFAULT_BUDGET,
};
use rbx_core::schema::Nested;
use rbx_core::structures::{
    check_dendriform, check_ns, dendriform_from_grb, derivation_dual, ns_from_nijenhuis, ns_from_trb,
};
use rbx_core::{Document, Error, Field, LinearMap, MultiLinear, MultiMap, Result, Verdict, Witness};
use serde_json::{json, Value};

use crate::report::Outcome;

fn nested(t: &MultiLinear) -> Value {
    serde_json::to_value(Nested::from_tensor(t)).expect("tensors serialize")
}

fn with_assoc(mut verdict: Verdict, product: &MultiLinear, label: &str) -> Result<Verdict> {
    for mut w in assoc_check(product)?.failures {
        w.label = format!("{label}: {}", w.label);
        verdict.failures.push(w);
    }
    Ok(verdict)
}

/// The first nonzero entry of a tensor as a witness against zero.
fn nonzero_witness(label: &str, t: &MultiLinear) -> Option<Witness> {
    t.first_nonzero().map(|idx| {
        let zero = vec![t.field().zero(); t.output_dim()];
        Witness::new(label, idx.clone(), t.image(&idx).to_vec(), zero)
    })
}

fn difference_witness(label: &str, lhs: &MultiLinear, rhs: &MultiLinear) -> Option<Witness> {
    lhs.first_difference(rhs)
        .map(|idx| Witness::new(label, idx.clone(), lhs.image(&idx).to_vec(), rhs.image(&idx).to_vec()))
}

pub fn check_assoc(doc: &Document) -> Result<Outcome> {
    let product = doc.algebra_product()?;
    Ok(Outcome::from_verdict(assoc_check(&product)?))
}

pub fn check_bimodule(doc: &Document) -> Result<Outcome> {
    let algebra = doc.algebra()?;
    let (left, right) = doc.bimodule_actions(&algebra)?;
    Ok(Outcome::from_verdict(bimodule_check(&algebra, &left, &right)?))
}

pub fn check_grb(doc: &Document, map: &str) -> Result<Outcome> {
    Ok(Outcome::from_verdict(is_grb(&doc.instance(map, None)?)?))
}

pub fn check_trb(doc: &Document, map: &str, cocycle: &str) -> Result<Outcome> {
    Ok(Outcome::from_verdict(is_trb(&doc.instance(map, Some(cocycle))?)?))
}

pub fn check_reynolds(doc: &Document, map: &str) -> Result<Outcome> {
    Ok(Outcome::from_verdict(is_reynolds(&doc.algebra()?, &doc.map(map)?)?))
}

pub fn check_nijenhuis(doc: &Document, map: &str) -> Result<Outcome> {
    Ok(Outcome::from_verdict(is_nijenhuis(&doc.algebra()?, &doc.map(map)?)?))
}

pub fn check_dendriform_cmd(doc: &Document) -> Result<Outcome> {
    let d = doc.dendriform()?;
    Ok(Outcome::from_verdict(with_assoc(check_dendriform(&d), &d.sum(), "total product")?))
}

pub fn check_ns_cmd(doc: &Document) -> Result<Outcome> {
    let t = doc.ns()?;
    Ok(Outcome::from_verdict(with_assoc(check_ns(&t), &t.times(), "total product")?))
}

pub fn check_addexp(doc: &Document, map: &str, cocycle: Option<&str>) -> Result<Outcome> {
    let inst = doc.instance(map, cocycle)?;
    let report = addexp_check(&inst)?;
    let mut out = Outcome { pass: report.holds(), ..Outcome::default() };
    if !report.equal {
        out.failures.extend(difference_witness(
            "exp(X_π)Θ = Θ + [Θ, π̂] + ½[[φ̂, π̂], π̂]",
            report.flow.sum.tensor(),
            report.truncation.tensor(),
        ));
    }
    if let Some(v) = report.restriction {
        out.failures.extend(v.failures);
    }
    let operator = check_operator(&inst)?;
    out.result = json!({ "truncation_equal": report.equal, "operator_identity": operator.holds() });
    Ok(out.line(format!("flow equals truncation: {}", yes(report.equal))))
}

pub fn residual(doc: &Document, map: &str, cocycle: Option<&str>) -> Result<Outcome> {
    let inst = doc.instance(map, cocycle)?;
    let r = structure_residual(&inst)?;
    let mut out = Outcome { pass: r.is_zero(), ..Outcome::default() };
    out.failures.extend(nonzero_witness("structure residual", r.residual.tensor()));
    let mut result = json!({ "residual": nested(r.residual.tensor()) });
    if inst.phi().is_some() {
        let holds = r.intermediate_identity_holds();
        result["intermediate_identity"] = json!(holds);
        out.lines.push(format!("π̂φ̂(π̂⊗π̂) = −(1/6)[[[φ̂,π̂],π̂],π̂]: {}", yes(holds)));
        if !holds {
            out.pass = false;
        }
    }
    out.result = result;
    Ok(out)
}

pub fn bracket(doc: &Document, f: &str, g: &str, mu: Option<&str>) -> Result<Outcome> {
    let a = doc.algebra()?;
    let m = doc.bimodule(&a)?;
    let (f, g) = (doc.multimap(f, &a, &m)?, doc.multimap(g, &a, &m)?);
    let b = match mu {
        Some(name) => derived_bracket(&f, &g, &doc.multimap(name, &a, &m)?)?,
        None => g_bracket(&f, &g)?,
    };
    let out = Outcome {
        pass: true,
        result: json!({ "arity": b.arity(), "bracket": nested(b.tensor()) }),
        ..Outcome::default()
    };
    Ok(out.line(format!("arity {}, zero: {}", b.arity(), yes(b.is_zero()))))
}

pub fn flow(doc: &Document, map: &str, cocycle: Option<&str>, emit: Option<&Path>) -> Result<Outcome> {
    let inst = doc.instance(map, cocycle)?;
    let flow = exp_flow(&inst)?;
    let square_zero = is_square_zero(&flow.sum)?;
    let intertwiner = flow_intertwiner(&inst, &flow)?;
    let terms: [(&str, &MultiMap); 6] = [
        ("Θ", &flow.theta),
        ("X(Θ)", &flow.first),
        ("½X²(Θ)", &flow.second),
        ("(1/6)X³(Θ)", &flow.third),
        ("X⁴(Θ)", &flow.fourth),
        ("sum", &flow.sum),
    ];
    let nonzero = |t: &MultiMap| t.tensor().data().iter().filter(|s| !s.is_zero()).count();
    let mut out = Outcome::from_verdict(intertwiner);
    out.pass &= flow.fourth.is_zero() && square_zero;
    out.lines.push(format!("{:<12} {:>5} {:>8}", "term", "arity", "nonzero"));
    for (name, t) in &terms {
        out.lines.push(format!("{:<12} {:>5} {:>8}", name, t.arity(), nonzero(t)));
    }
    out.lines.push(format!("X⁴(Θ) = 0: {}", yes(flow.fourth.is_zero())));
    out.lines.push(format!("[sum, sum] = 0: {}", yes(square_zero)));
    out.result = json!({
        "terms": terms.iter().map(|(name, t)| json!({ "name": name, "nonzero": nonzero(t), "tensor": nested(t.tensor()) })).collect::<Vec<_>>(),
        "fourth_vanishes": flow.fourth.is_zero(),
        "square_zero": square_zero,
    });
    if let Some(path) = emit {
        let mut products = Document::from_instance(&inst);
        products
            .insert_multimap("theta", &flow.theta)
            .insert_multimap("flow_1", &flow.first)
            .insert_multimap("flow_2", &flow.second)
            .insert_multimap("flow_3", &flow.third)
            .insert_multimap("flow", &flow.sum);
        write(path, &products)?;
        out.lines.push(format!("wrote {}", path.display()));
    }
    Ok(out)
}

fn write(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, doc.to_json()).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

fn emit(doc: Document, output: Option<&Path>) -> Result<Outcome> {
    match output {
        Some(path) => {
            write(path, &doc)?;
            Ok(Outcome::passed().line(format!("wrote {}", path.display())))
        }
        None => Ok(Outcome { pass: true, document: Some(doc), ..Outcome::default() }),
    }
}

pub fn derive_dendriform(doc: &Document, map: &str, output: Option<&Path>) -> Result<Outcome> {
    let inst = doc.instance(map, None)?;
    let verdict = is_grb(&inst)?;
    if !verdict.holds() {
        return Ok(Outcome::from_verdict(verdict));
    }
    let d = dendriform_from_grb(&inst)?;
    let mut out = Document::new(inst.field());
    out.set_dendriform(&d);
    emit(out, output)
}

pub fn derive_ns(
    doc: &Document,
    map: &str,
    cocycle: Option<&str>,
    nijenhuis: bool,
    output: Option<&Path>,
) -> Result<Outcome> {
    let t = if nijenhuis {
        let (a, n) = (doc.algebra()?, doc.map(map)?);
        let verdict = is_nijenhuis(&a, &n)?;
        if !verdict.holds() {
            return Ok(Outcome::from_verdict(verdict));
        }
        ns_from_nijenhuis(&a, &n)?
    } else {
        let inst = doc.instance(map, cocycle)?;
        let verdict = check_operator(&inst)?;
        if !verdict.holds() {
            return Ok(Outcome::from_verdict(verdict));
        }
        ns_from_trb(&inst)?
    };
    let mut out = Document::new(t.field());
    out.set_ns(&t);
    emit(out, output)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Grb,
    Rb,
    Trb,
    Reynolds,
    Nijenhuis,
    Aybe,
}

pub fn budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("RBX_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Input(format!("RBX_BUDGET must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

pub fn search(doc: &Document, kind: Kind, cocycle: Option<&str>, budget: u64) -> Result<Outcome> {
    let a = doc.algebra()?;
    let m = doc.bimodule(&a)?;
    let kind = match kind {
        Kind::Grb => SearchKind::Grb,
        Kind::Rb => SearchKind::Rb,
        Kind::Trb => SearchKind::Trb(doc.cochain(cocycle.unwrap_or("phi"), &a, &m)?),
        Kind::Reynolds => SearchKind::Reynolds,
        Kind::Nijenhuis => SearchKind::Nijenhuis,
        Kind::Aybe => SearchKind::Aybe,
    };
    let solutions = search_operators(&a, &m, &kind, budget)?;
    let mut out = Outcome::passed().line(format!("{} solutions", solutions.len()));
    let mut list = Vec::with_capacity(solutions.len());
    for s in &solutions {
        let value = match s {
            Solution::Map(map) => nested(map.matrix()),
            Solution::Tensor(t) => serde_json::to_value(Nested::from_element(t)).expect("tensors serialize"),
        };
        out.lines.push(value.to_string());
        list.push(value);
    }
    out.result = json!({ "count": solutions.len(), "solutions": list });
    Ok(out)
}

pub fn aybe(doc: &Document, tensor: &str) -> Result<Outcome> {
    let a = doc.algebra()?;
    let r = doc.tensor(tensor, a.dim())?;
    let residual = aybe_residual(&a, &r)?;
    let mut out = Outcome { pass: residual.is_zero(), ..Outcome::default() };
    if let Some(idx) = residual.first_nonzero() {
        let f = a.field();
        out.failures.push(Witness::new(
            "AYBE residual",
            idx.clone(),
            vec![residual.coeff(&idx).clone()],
            vec![f.zero()],
        ));
    }
    let skew = r.is_skew();
    out.lines.push(format!("skew-symmetric: {}", yes(skew)));
    let mut result = json!({
        "residual": serde_json::to_value(Nested::from_element(&residual)).expect("tensors serialize"),
        "skew": skew,
    });
    if out.pass && skew {
        let inst = r_tilde(&a, &r)?;
        let grb = is_grb(&inst)?;
        out.lines.push(format!("r̃ is a generalized Rota-Baxter operator on A*: {}", yes(grb.holds())));
        result["r_tilde"] = nested(inst.pi().matrix());
        out.pass = grb.holds();
        out.failures.extend(grb.failures);
    }
    out.result = result;
    Ok(out)
}

const CATALOG: &[(&str, &str)] = &[
    ("dual_numbers", "k[x]/(x²)"),
    ("null1", "one-dimensional algebra with zero product"),
    ("unit1", "the ground field"),
    ("null2", "two-dimensional algebra with zero product"),
    ("row2", "e₀e₀ = e₀, e₀e₁ = e₁"),
    ("diag2", "k × k"),
    ("times_x", "multiplication by x on k[x]/(x²), a Rota-Baxter operator"),
    ("mu_as_trb", "μ: A⊗A → A with φ(a, b) = −a⊗b"),
    ("invertible_omega", "π = ω⁻¹ for the swap 1-cochain ω, φ = −∂ω"),
    ("unit_section_tensor", "f = μ on A⊗A, e = 1⊗1, φ(a, b) = −a·e·b"),
    ("unit_section_identity", "f = id on A, e = 1, φ(a, b) = −ab"),
    ("reynolds_identity", "R = id as a twisted operator with φ = −μ"),
    ("truncated_polynomial", "∫ on polynomials truncated at degree N (--degree)"),
    ("weyl", "∫ dy on the Weyl algebra truncated at N (--degree), verified on a window (--window)"),
];

pub fn catalog_list() -> Outcome {
    let mut out = Outcome::passed();
    for (name, desc) in CATALOG {
        out.lines.push(format!("{name:<22} {desc}"));
    }
    out.result =
        json!({ "entries": CATALOG.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect::<Vec<_>>() });
    out
}

fn weyl_degree(degree: Option<u32>) -> u32 {
    degree.unwrap_or(8)
}

pub fn catalog_document(name: &str, field: Field, degree: Option<u32>) -> Result<Document> {
    if ALGEBRAS.contains(&name) {
        let mut doc = Document::new(field);
        doc.set_algebra(&instances::algebra(name, field)?);
        return Ok(doc);
    }
    if name == "times_x" {
        return Ok(Document::from_instance(&instances::times_x(field)?));
    }
    if TRB_INSTANCES.contains(&name) {
        return Ok(Document::from_instance(&instances::trb_instance(name, field)?));
    }
    match name {
        "truncated_polynomial" => {
            let tp = instances::truncated_polynomial(field, degree.unwrap_or(4) as usize)?;
            let mut doc = Document::from_instance(&tp.instance);
            doc.insert_map("omega", &tp.omega).insert_map("pi_omega", &tp.pi_omega());
            Ok(doc)
        }
        "weyl" => Err(Error::Capacity(format!(
            "the Weyl algebra is simple, so the truncation at N = {} has no structure constants; use `rbx catalog verify weyl`",
            weyl_degree(degree)
        ))),
        _ => Err(Error::Input(format!("unknown catalog entry {name:?}; see `rbx catalog list`"))),
    }
}

pub fn catalog_emit(name: &str, field: Field, degree: Option<u32>, output: Option<&Path>) -> Result<Outcome> {
    emit(catalog_document(name, field, degree)?, output)
}

pub fn catalog_verify(name: &str, field: Field, degree: Option<u32>, window: Option<u32>) -> Result<Outcome> {
    if name == "weyl" {
        let n = weyl_degree(degree);
        let weyl = TruncatedWeyl::new(n)?;
        let reports = weyl.verify(window.unwrap_or(3))?;
        let mut out = Outcome { pass: reports.iter().all(|r| r.holds()), ..Outcome::default() };
        for r in &reports {
            out.lines.push(r.to_string());
            if let Some(fail) = &r.failure {
                let indices = fail.monomials.iter().flat_map(|&(i, j)| [i as usize, j as usize]).collect();
                out.failures.push(Witness::new(
                    format!("{}: lhs {} ≠ rhs {}", r.identity, fail.lhs, fail.rhs),
                    indices,
                    vec![],
                    vec![],
                ));
            }
        }
        out.result = json!({
            "degree": n,
            "window": window.unwrap_or(3),
            "identities": reports.iter().map(|r| json!({ "identity": r.identity, "checked": r.checked, "holds": r.holds() })).collect::<Vec<_>>(),
        });
        return Ok(out);
    }
    if name == "truncated_polynomial" {
        let tp = instances::truncated_polynomial(field, degree.unwrap_or(4) as usize)?;
        let inst = &tp.instance;
        let mut verdict = is_grb(inst)?;
        verdict.failures.extend(identity_failures("Ω∘π = id", &tp.omega.compose(inst.pi())?)?);
        verdict.failures.extend(identity_failures("π∘Ω = id", &inst.pi().compose(&tp.omega)?)?);
        verdict.failures.extend(is_nijenhuis(inst.algebra(), &tp.pi_omega())?.failures);
        let dual = derivation_dual(inst, &tp.omega, &field.one())?;
        verdict.failures.extend(is_grb(&dual)?.failures);
        return Ok(Outcome::from_verdict(verdict));
    }
    let doc = catalog_document(name, field, degree)?;
    if doc.maps.is_empty() {
        return Ok(Outcome::from_verdict(assoc_check(&doc.algebra_product()?)?));
    }
    let inst = doc.instance("pi", doc.cochains.contains_key("phi").then_some("phi"))?;
    let mut verdict = check_operator(&inst)?;
    match name {
        "times_x" => verdict.failures.extend(is_rota_baxter(inst.algebra(), inst.pi())?.failures),
        "reynolds_identity" => verdict.failures.extend(is_reynolds(inst.algebra(), inst.pi())?.failures),
        _ => {}
    }
    Ok(Outcome::from_verdict(verdict))
}

fn identity_failures(label: &str, map: &LinearMap) -> Result<Vec<Witness>> {
    let id = LinearMap::identity(map.field(), map.source_dim());
    Ok(difference_witness(label, map.matrix(), id.matrix()).into_iter().collect())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
