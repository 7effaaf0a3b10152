//! The JSON interchange format.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "algebra": { "dim": 2, "c": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]] },
//!   "bimodule": { "dim": 2, "left": [...], "right": [...] },
//!   "maps": { "pi": [["0", "1"], ["0", "0"]] },
//!   "cochains": { "phi": { "arity": 2, "inputs": "A", "output": "M", "tensor": [...] } },
//!   "dendriform": { "dim": 2, "succ": [...], "prec": [...] },
//!   "ns": { "dim": 2, "succ": [...], "prec": [...], "vee": [...] },
//!   "tensors": { "r": { "order": 2, "coeffs": [...] } },
//!   "scalars": { "z": "1" }
//! }
//! ```
//!
//! `field` is `"Q"` or `{"Fp": p}`. Every tensor is a nested array indexed
//! inputs first and output last, so `c[i][j][k]` is the `eₖ`-coefficient of
//! `eᵢeⱼ`, `left[a][m][k]` that of `eₐ·mₘ`, and a map matrix is indexed
//! `[source][target]`. Scalars are integers or `"num/den"` strings; output
//! always uses canonical strings. Cochain spaces are `"A"`, `"M"` or `"B"`
//! (`A ⊕ M`). Only `field` is required; `bimodule` defaults to the regular
//! module.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Bimodule, LinearMap};
use crate::cochains::Cochain;
use crate::error::{input, Error, Result};
use crate::gerstenhaber::MultiMap;
use crate::operators::{OperatorInstance, TensorElement};
use crate::scalar::{Field, FieldRepr, Scalar, ScalarRepr};
use crate::structures::{Dendriform, NsAlgebra};
use crate::tensor::MultiLinear;

/// A nested array of scalars.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Nested {
    List(Vec<Nested>),
    Leaf(ScalarRepr),
}

impl Nested {
    /// The nested-array form of a tensor, inputs first and output last.
    pub fn from_tensor(t: &MultiLinear) -> Nested {
        let shape: Vec<usize> = t.input_dims().iter().copied().chain([t.output_dim()]).collect();
        Nested::from_flat(t.data(), &shape)
    }

    pub fn from_element(t: &TensorElement) -> Nested {
        Nested::from_flat(t.data(), &vec![t.dim(); t.order()])
    }

    fn from_flat(data: &[Scalar], shape: &[usize]) -> Nested {
        match shape.split_first() {
            None => Nested::Leaf(ScalarRepr::from(&data[0])),
            Some((&n, rest)) => {
                let stride: usize = rest.iter().product();
                Nested::List((0..n).map(|i| Nested::from_flat(&data[i * stride..(i + 1) * stride], rest)).collect())
            }
        }
    }

    fn flatten(&self, shape: &[usize], field: Field, path: &mut Vec<usize>, out: &mut Vec<Scalar>) -> Result<()> {
        match (self, shape.split_first()) {
            (Nested::Leaf(s), None) => {
                out.push(s.clone().into_scalar(field).map_err(|e| at(path, e))?);
                Ok(())
            }
            (Nested::List(items), Some((&n, rest))) if items.len() == n => {
                for (i, item) in items.iter().enumerate() {
                    path.push(i);
                    item.flatten(rest, field, path, out)?;
                    path.pop();
                }
                Ok(())
            }
            (Nested::List(items), Some((&n, _))) => {
                input(format!("expected {n} entries at {path:?}, found {}", items.len()))
            }
            (Nested::List(_), None) => input(format!("expected a scalar at {path:?}, found an array")),
            (Nested::Leaf(_), Some(_)) => input(format!("expected an array at {path:?}, found a scalar")),
        }
    }

    /// Reads a tensor of the given shape.
    pub fn to_flat(&self, shape: &[usize], field: Field) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(shape.iter().product());
        self.flatten(shape, field, &mut Vec::new(), &mut out)?;
        Ok(out)
    }

    /// Infers the shape of a rectangular nested array.
    fn shape(&self) -> Result<Vec<usize>> {
        match self {
            Nested::Leaf(_) => Ok(vec![]),
            Nested::List(items) => {
                let Some(first) = items.first() else {
                    return input("empty array");
                };
                let inner = first.shape()?;
                for item in items {
                    if item.shape()? != inner {
                        return input("ragged array");
                    }
                }
                Ok(std::iter::once(items.len()).chain(inner).collect())
            }
        }
    }

    fn canonical(&self, field: Field) -> Result<Nested> {
        Ok(match self {
            Nested::Leaf(s) => Nested::Leaf(ScalarRepr::from(&s.clone().into_scalar(field)?)),
            Nested::List(items) => Nested::List(items.iter().map(|i| i.canonical(field)).collect::<Result<_>>()?),
        })
    }
}

fn at(path: &[usize], e: Error) -> Error {
    match e {
        Error::Input(msg) => Error::Input(format!("{msg} at {path:?}")),
        other => other,
    }
}

fn read_tensor(n: &Nested, field: Field, inputs: &[usize], output: usize, what: &str) -> Result<MultiLinear> {
    let shape: Vec<usize> = inputs.iter().copied().chain([output]).collect();
    let data = n.to_flat(&shape, field).map_err(|e| context(what, e))?;
    MultiLinear::from_flat(field, inputs, output, data)
}

fn context(what: &str, e: Error) -> Error {
    match e {
        Error::Input(msg) => Error::Input(format!("{what}: {msg}")),
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub c: Nested,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub dim: usize,
    pub left: Nested,
    pub right: Nested,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub arity: usize,
    pub inputs: String,
    pub output: String,
    pub tensor: Nested,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DendriformDoc {
    pub dim: usize,
    pub succ: Nested,
    pub prec: Nested,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NsDoc {
    pub dim: usize,
    pub succ: Nested,
    pub prec: Nested,
    pub vee: Nested,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub order: usize,
    pub coeffs: Nested,
}

/// One instance file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: FieldRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Nested>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cochains: BTreeMap<String, CochainDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dendriform: Option<DendriformDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ns: Option<NsDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, TensorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub scalars: BTreeMap<String, ScalarRepr>,
}

impl Document {
    pub fn new(field: Field) -> Self {
        Document {
            field: field.into(),
            algebra: None,
            bimodule: None,
            maps: BTreeMap::new(),
            cochains: BTreeMap::new(),
            dendriform: None,
            ns: None,
            tensors: BTreeMap::new(),
            scalars: BTreeMap::new(),
        }
    }

    /// Parses a document; syntax errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed instance file: {e}")))?;
        doc.field()?;
        Ok(doc)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// The same document with every scalar rewritten in canonical form.
    pub fn canonical(&self) -> Result<Document> {
        let f = self.field()?;
        let mut doc = self.clone();
        if let Some(a) = &mut doc.algebra {
            a.c = a.c.canonical(f)?;
        }
        if let Some(m) = &mut doc.bimodule {
            m.left = m.left.canonical(f)?;
            m.right = m.right.canonical(f)?;
        }
        for m in doc.maps.values_mut() {
            *m = m.canonical(f)?;
        }
        for c in doc.cochains.values_mut() {
            c.tensor = c.tensor.canonical(f)?;
        }
        if let Some(d) = &mut doc.dendriform {
            d.succ = d.succ.canonical(f)?;
            d.prec = d.prec.canonical(f)?;
        }
        if let Some(t) = &mut doc.ns {
            t.succ = t.succ.canonical(f)?;
            t.prec = t.prec.canonical(f)?;
            t.vee = t.vee.canonical(f)?;
        }
        for t in doc.tensors.values_mut() {
            t.coeffs = t.coeffs.canonical(f)?;
        }
        for s in doc.scalars.values_mut() {
            *s = ScalarRepr::from(&s.clone().into_scalar(f)?);
        }
        Ok(doc)
    }

    pub fn field(&self) -> Result<Field> {
        Field::try_from(self.field.clone())
    }

    /// The structure constants without the associativity check.
    pub fn algebra_product(&self) -> Result<MultiLinear> {
        let Some(doc) = &self.algebra else {
            return input("the file has no \"algebra\"");
        };
        let n = doc.dim;
        read_tensor(&doc.c, self.field()?, &[n, n], n, "algebra.c")
    }

    pub fn algebra(&self) -> Result<Algebra> {
        let a = Algebra::new(self.algebra_product()?)?;
        match self.algebra.as_ref().and_then(|doc| doc.labels.as_ref()) {
            Some(l) => a.with_labels(l.clone()),
            None => Ok(a),
        }
    }

    /// The declared left and right actions without the bimodule check.
    pub fn bimodule_actions(&self, algebra: &Algebra) -> Result<(MultiLinear, MultiLinear)> {
        let Some(doc) = &self.bimodule else {
            return input("the file has no \"bimodule\"");
        };
        let f = self.field()?;
        let (a, m) = (algebra.dim(), doc.dim);
        let left = read_tensor(&doc.left, f, &[a, m], m, "bimodule.left")?;
        let right = read_tensor(&doc.right, f, &[m, a], m, "bimodule.right")?;
        Ok((left, right))
    }

    /// The declared bimodule, or the regular one when absent.
    pub fn bimodule(&self, algebra: &Algebra) -> Result<Bimodule> {
        if self.bimodule.is_none() {
            return Ok(Bimodule::regular(algebra));
        }
        let (left, right) = self.bimodule_actions(algebra)?;
        Bimodule::new(algebra, left, right)
    }

    pub fn map(&self, name: &str) -> Result<LinearMap> {
        let Some(n) = self.maps.get(name) else {
            return input(format!("no map named {name:?}"));
        };
        let shape = n.shape().map_err(|e| context(name, e))?;
        let [source, target] = shape[..] else {
            return input(format!("map {name:?} must be a matrix"));
        };
        LinearMap::new(read_tensor(n, self.field()?, &[source], target, name)?)
    }

    fn space_dim(&self, space: &str, algebra: &Algebra, module: &Bimodule) -> Result<usize> {
        match space {
            "A" => Ok(algebra.dim()),
            "M" => Ok(module.dim()),
            "B" => Ok(algebra.dim() + module.dim()),
            other => input(format!("unknown space {other:?} (expected \"A\", \"M\" or \"B\")")),
        }
    }

    fn cochain_tensor(&self, name: &str, algebra: &Algebra, module: &Bimodule) -> Result<(&CochainDoc, MultiLinear)> {
        let Some(doc) = self.cochains.get(name) else {
            return input(format!("no cochain named {name:?}"));
        };
        let din = self.space_dim(&doc.inputs, algebra, module)?;
        let dout = self.space_dim(&doc.output, algebra, module)?;
        let t = read_tensor(&doc.tensor, self.field()?, &vec![din; doc.arity], dout, name)?;
        Ok((doc, t))
    }

    /// A cochain `Aⁿ → M`.
    pub fn cochain(&self, name: &str, algebra: &Algebra, module: &Bimodule) -> Result<Cochain> {
        let (doc, t) = self.cochain_tensor(name, algebra, module)?;
        if doc.inputs != "A" || doc.output != "M" {
            return input(format!("cochain {name:?} must map A to M"));
        }
        Cochain::new(algebra, module, t)
    }

    /// A multilinear map on `A ⊕ M` (inputs and output `"B"`).
    pub fn multimap(&self, name: &str, algebra: &Algebra, module: &Bimodule) -> Result<MultiMap> {
        let (doc, t) = self.cochain_tensor(name, algebra, module)?;
        if doc.inputs != "B" || doc.output != "B" {
            return input(format!("{name:?} must map B to B"));
        }
        MultiMap::new(t)
    }

    pub fn dendriform(&self) -> Result<Dendriform> {
        let Some(d) = &self.dendriform else {
            return input("the file has no \"dendriform\"");
        };
        let f = self.field()?;
        let n = d.dim;
        Dendriform::new(
            read_tensor(&d.succ, f, &[n, n], n, "dendriform.succ")?,
            read_tensor(&d.prec, f, &[n, n], n, "dendriform.prec")?,
        )
    }

    pub fn ns(&self) -> Result<NsAlgebra> {
        let Some(d) = &self.ns else {
            return input("the file has no \"ns\"");
        };
        let f = self.field()?;
        let n = d.dim;
        NsAlgebra::new(
            read_tensor(&d.succ, f, &[n, n], n, "ns.succ")?,
            read_tensor(&d.prec, f, &[n, n], n, "ns.prec")?,
            read_tensor(&d.vee, f, &[n, n], n, "ns.vee")?,
        )
    }

    pub fn tensor(&self, name: &str, dim: usize) -> Result<TensorElement> {
        let Some(t) = self.tensors.get(name) else {
            return input(format!("no tensor named {name:?}"));
        };
        let f = self.field()?;
        let data = t.coeffs.to_flat(&vec![dim; t.order], f).map_err(|e| context(name, e))?;
        TensorElement::new(f, dim, t.order, data)
    }

    pub fn scalar(&self, name: &str) -> Result<Scalar> {
        let Some(s) = self.scalars.get(name) else {
            return input(format!("no scalar named {name:?}"));
        };
        s.clone().into_scalar(self.field()?)
    }

    /// Assembles an operator instance from the algebra, bimodule, a map and an optional cochain.
    pub fn instance(&self, pi: &str, phi: Option<&str>) -> Result<OperatorInstance> {
        let a = self.algebra()?;
        let m = self.bimodule(&a)?;
        let pi = self.map(pi)?;
        let phi = phi.map(|name| self.cochain(name, &a, &m)).transpose()?;
        OperatorInstance::new(a, m, pi, phi)
    }

    pub fn set_algebra(&mut self, algebra: &Algebra) -> &mut Self {
        self.algebra = Some(AlgebraDoc {
            dim: algebra.dim(),
            c: Nested::from_tensor(algebra.product()),
            labels: algebra.labels().map(<[String]>::to_vec),
        });
        self
    }

    pub fn set_bimodule(&mut self, module: &Bimodule) -> &mut Self {
        self.bimodule = Some(BimoduleDoc {
            dim: module.dim(),
            left: Nested::from_tensor(module.left()),
            right: Nested::from_tensor(module.right()),
        });
        self
    }

    pub fn insert_map(&mut self, name: &str, map: &LinearMap) -> &mut Self {
        self.maps.insert(name.to_string(), Nested::from_tensor(map.matrix()));
        self
    }

    pub fn insert_cochain(&mut self, name: &str, cochain: &Cochain) -> &mut Self {
        self.cochains.insert(
            name.to_string(),
            CochainDoc {
                arity: cochain.arity(),
                inputs: "A".into(),
                output: "M".into(),
                tensor: Nested::from_tensor(cochain.tensor()),
            },
        );
        self
    }

    pub fn insert_multimap(&mut self, name: &str, map: &MultiMap) -> &mut Self {
        self.cochains.insert(
            name.to_string(),
            CochainDoc {
                arity: map.arity(),
                inputs: "B".into(),
                output: "B".into(),
                tensor: Nested::from_tensor(map.tensor()),
            },
        );
        self
    }

    pub fn set_dendriform(&mut self, d: &Dendriform) -> &mut Self {
        self.dendriform = Some(DendriformDoc {
            dim: d.dim(),
            succ: Nested::from_tensor(d.succ()),
            prec: Nested::from_tensor(d.prec()),
        });
        self
    }

    pub fn set_ns(&mut self, t: &NsAlgebra) -> &mut Self {
        self.ns = Some(NsDoc {
            dim: t.dim(),
            succ: Nested::from_tensor(t.succ()),
            prec: Nested::from_tensor(t.prec()),
            vee: Nested::from_tensor(t.vee()),
        });
        self
    }

    pub fn insert_tensor(&mut self, name: &str, t: &TensorElement) -> &mut Self {
        self.tensors.insert(name.to_string(), TensorDoc { order: t.order(), coeffs: Nested::from_element(t) });
        self
    }

    pub fn insert_scalar(&mut self, name: &str, s: &Scalar) -> &mut Self {
        self.scalars.insert(name.to_string(), ScalarRepr::from(s));
        self
    }

    /// A document holding an instance, with the operator under `"pi"` and the cocycle under `"phi"`.
    pub fn from_instance(inst: &OperatorInstance) -> Document {
        let mut doc = Document::new(inst.field());
        doc.set_algebra(inst.algebra()).set_bimodule(inst.module()).insert_map("pi", inst.pi());
        if let Some(phi) = inst.phi() {
            doc.insert_cochain("phi", phi);
        }
        doc
    }
}
