//! Outcomes of identity checks.

use std::fmt;

use crate::scalar::Scalar;

/// A basis tuple on which an identity fails, with both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Which identity or axiom failed.
    pub label: String,
    /// Input basis indices, in the order the identity takes its arguments.
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Witness {
    pub fn new(label: impl Into<String>, indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Self {
        Witness { label: label.into(), indices, lhs, rhs }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Scalar]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{} fails at {:?}: lhs = [{}], rhs = [{}]",
            self.label,
            self.indices,
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

/// Result of checking one or more identities on all basis tuples.
///
/// Holds the lexicographically first failure of each violated identity, so an
/// empty list means every identity holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Witness>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.failures.first()
    }

    pub fn pass() -> Self {
        Verdict::default()
    }

    pub fn fail(w: Witness) -> Self {
        Verdict { failures: vec![w] }
    }

    pub fn from_option(w: Option<Witness>) -> Self {
        Verdict { failures: w.into_iter().collect() }
    }

    pub fn merge(mut self, other: Verdict) -> Self {
        self.failures.extend(other.failures);
        self
    }
}

/// Scans tuples in order and returns the first where `lhs != rhs`.
pub(crate) fn first_failure<I>(
    label: &str,
    tuples: I,
    mut sides: impl FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
) -> Option<Witness>
where
    I: IntoIterator<Item = Vec<usize>>,
{
    for t in tuples {
        let (l, r) = sides(&t);
        if l != r {
            return Some(Witness::new(label, t, l, r));
        }
    }
    None
}
