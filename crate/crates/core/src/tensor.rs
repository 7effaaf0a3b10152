//! Dense multilinear maps stored as coefficient tensors.
//!
//! A map `V₁ × … × V_k → W` is stored with the input axes first and the output
//! axis last, row-major. The image of a basis tuple is therefore a contiguous
//! slice of length `dim W`.

use crate::error::{input, Result};
use crate::scalar::{Field, Scalar};

/// Lexicographic odometer over `0..d₁ × … × 0..d_k`.
#[derive(Debug, Clone)]
pub struct Tuples {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Tuples {
    pub fn new(dims: &[usize]) -> Self {
        let next = if dims.contains(&0) { None } else { Some(vec![0; dims.len()]) };
        Tuples { dims: dims.to_vec(), next }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.dims[pos] {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

/// Iterates all basis tuples of the given shape in lexicographic order.
pub fn tuples(dims: &[usize]) -> Tuples {
    Tuples::new(dims)
}

/// A multilinear map between coordinate spaces over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiLinear {
    field: Field,
    inputs: Vec<usize>,
    output: usize,
    data: Vec<Scalar>,
}

impl MultiLinear {
    pub fn zeros(field: Field, inputs: &[usize], output: usize) -> Self {
        let len = inputs.iter().product::<usize>() * output;
        MultiLinear { field, inputs: inputs.to_vec(), output, data: vec![field.zero(); len] }
    }

    /// Wraps flat row-major data, validating the length and field of every entry.
    pub fn from_flat(field: Field, inputs: &[usize], output: usize, data: Vec<Scalar>) -> Result<Self> {
        let len = inputs.iter().product::<usize>() * output;
        if data.len() != len {
            return input(format!(
                "tensor of shape {:?}→{} needs {} coefficients, got {}",
                inputs,
                output,
                len,
                data.len()
            ));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return input(format!("coefficient {bad} is not in {field}"));
        }
        Ok(MultiLinear { field, inputs: inputs.to_vec(), output, data })
    }

    /// Builds the tensor from a function of (basis tuple, output coordinate).
    pub fn from_fn(
        field: Field,
        inputs: &[usize],
        output: usize,
        mut f: impl FnMut(&[usize], usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(inputs.iter().product::<usize>() * output);
        for t in tuples(inputs) {
            for k in 0..output {
                data.push(f(&t, k));
            }
        }
        MultiLinear { field, inputs: inputs.to_vec(), output, data }
    }

    /// Builds the tensor from a function returning the whole image of a basis tuple.
    pub fn from_images(
        field: Field,
        inputs: &[usize],
        output: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let mut data = Vec::with_capacity(inputs.iter().product::<usize>() * output);
        for t in tuples(inputs) {
            let img = f(&t);
            debug_assert_eq!(img.len(), output);
            data.extend(img);
        }
        MultiLinear { field, inputs: inputs.to_vec(), output, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.inputs
    }

    pub fn output_dim(&self) -> usize {
        self.output
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.inputs.len());
        let mut idx = 0;
        for (&t, &d) in tuple.iter().zip(&self.inputs) {
            debug_assert!(t < d);
            idx = idx * d + t;
        }
        idx * self.output
    }

    /// The image of a basis tuple.
    pub fn image(&self, tuple: &[usize]) -> &[Scalar] {
        let o = self.offset(tuple);
        &self.data[o..o + self.output]
    }

    pub fn image_mut(&mut self, tuple: &[usize]) -> &mut [Scalar] {
        let o = self.offset(tuple);
        let n = self.output;
        &mut self.data[o..o + n]
    }

    pub fn entry(&self, tuple: &[usize], out: usize) -> &Scalar {
        &self.image(tuple)[out]
    }

    pub fn set(&mut self, tuple: &[usize], out: usize, value: Scalar) {
        self.image_mut(tuple)[out] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Evaluates the map on arbitrary vectors by multilinear expansion.
    pub fn apply(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity(), "wrong number of arguments");
        for (a, &d) in args.iter().zip(&self.inputs) {
            assert_eq!(a.len(), d, "argument dimension mismatch");
        }
        let mut out = vec![self.field.zero(); self.output];
        let mut tuple = vec![0; self.arity()];
        self.apply_rec(args, 0, &self.field.one(), &mut tuple, &mut out);
        out
    }

    fn apply_rec(&self, args: &[&[Scalar]], depth: usize, coeff: &Scalar, tuple: &mut Vec<usize>, out: &mut [Scalar]) {
        if depth == args.len() {
            axpy(out, coeff, self.image(tuple));
            return;
        }
        for (i, c) in args[depth].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            tuple[depth] = i;
            let next = coeff * c;
            self.apply_rec(args, depth + 1, &next, tuple, out);
        }
    }

    fn same_shape(&self, other: &MultiLinear) -> bool {
        self.field == other.field && self.inputs == other.inputs && self.output == other.output
    }

    pub fn try_add(&self, other: &MultiLinear) -> Result<MultiLinear> {
        if !self.same_shape(other) {
            return input("cannot add tensors of different shapes");
        }
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &MultiLinear) -> Result<MultiLinear> {
        if !self.same_shape(other) {
            return input("cannot subtract tensors of different shapes");
        }
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &MultiLinear, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> MultiLinear {
        MultiLinear {
            field: self.field,
            inputs: self.inputs.clone(),
            output: self.output,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> MultiLinear {
        MultiLinear {
            field: self.field,
            inputs: self.inputs.clone(),
            output: self.output,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> MultiLinear {
        self.scale(&-self.field.one())
    }

    /// The first basis tuple (lexicographic) whose image is nonzero.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        tuples(&self.inputs).find(|t| self.image(t).iter().any(|s| !s.is_zero()))
    }

    /// The first basis tuple on which two same-shaped maps differ.
    pub fn first_difference(&self, other: &MultiLinear) -> Option<Vec<usize>> {
        assert!(self.same_shape(other), "shape mismatch");
        tuples(&self.inputs).find(|t| self.image(t) != other.image(t))
    }
}

/// `acc += coeff · v`.
pub fn axpy(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(coeff * x);
        }
    }
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| s * x).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// The `i`-th standard basis vector.
pub fn basis_vector(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}
