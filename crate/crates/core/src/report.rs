//! Property reports with counterexample witnesses.

use std::fmt;

use rayon::prelude::*;

use crate::scalar::{Field, Scalar};

/// Basis indices at which a property fails, with both sides of the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S = Scalar> {
    pub indices: Vec<(String, usize)>,
    pub lhs: Vec<S>,
    pub rhs: Vec<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyOutcome<S = Scalar> {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness<S>>,
    pub note: Option<String>,
}

impl<S> PropertyOutcome<S> {
    pub fn pass(name: impl Into<String>) -> Self {
        PropertyOutcome { name: name.into(), passed: true, witnesses: Vec::new(), note: None }
    }

    pub fn fail(name: impl Into<String>, note: impl Into<String>) -> Self {
        PropertyOutcome { name: name.into(), passed: false, witnesses: Vec::new(), note: Some(note.into()) }
    }

    /// Passes or fails with a note and no witness.
    pub fn flag(name: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, note)
        }
    }
}

/// The outcome of checking a list of properties against one object.
#[derive(Clone, Debug, PartialEq)]
pub struct Report<S = Scalar> {
    pub subject: String,
    pub properties: Vec<PropertyOutcome<S>>,
}

impl<S: Clone> Report<S> {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), properties: Vec::new() }
    }

    pub fn push(&mut self, p: PropertyOutcome<S>) {
        self.properties.push(p);
    }

    /// Appends the properties of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report<S>) {
        for mut p in other.properties {
            if !prefix.is_empty() {
                p.name = format!("{prefix}.{}", p.name);
            }
            self.properties.push(p);
        }
    }

    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyOutcome<S>> {
        self.properties.iter().filter(|p| !p.passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyOutcome<S>> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// Names of the failed properties in check order.
    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().map(|p| p.name.as_str()).collect()
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Report<T> {
        Report {
            subject: self.subject.clone(),
            properties: self
                .properties
                .iter()
                .map(|p| PropertyOutcome {
                    name: p.name.clone(),
                    passed: p.passed,
                    note: p.note.clone(),
                    witnesses: p
                        .witnesses
                        .iter()
                        .map(|w| Witness {
                            indices: w.indices.clone(),
                            lhs: w.lhs.iter().map(&f).collect(),
                            rhs: w.rhs.iter().map(&f).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl Report<Scalar> {
    /// Scalars rendered canonically for `field`.
    pub fn render(&self, field: Field) -> Report<String> {
        self.map(|s| field.format(s))
    }
}

impl<S: fmt::Display> fmt::Display for Report<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for p in &self.properties {
            writeln!(f, "  {:<40} {}", p.name, if p.passed { "ok" } else { "FAILED" })?;
            if let Some(n) = &p.note {
                writeln!(f, "    {n}")?;
            }
            for w in &p.witnesses {
                let idx: Vec<String> = w.indices.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let show = |v: &[S]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
                writeln!(f, "    at {}: lhs [{}] rhs [{}]", idx.join(" "), show(&w.lhs), show(&w.rhs))?;
            }
        }
        Ok(())
    }
}

/// Options shared by all property checks.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckConfig {
    /// Collect every failing index tuple instead of only the first.
    pub all_witnesses: bool,
}

/// Checks `test` at every index tuple of the box `dims`, in lexicographic order.
///
/// `test` returns `Some((lhs, rhs))` when the identity fails. The first witness
/// is the lexicographically smallest one regardless of thread scheduling.
pub fn sweep<S, F>(name: &str, labels: &[&str], dims: &[usize], cfg: CheckConfig, test: F) -> PropertyOutcome<S>
where
    S: Send,
    F: Fn(&[usize]) -> Option<(Vec<S>, Vec<S>)> + Sync,
{
    assert_eq!(labels.len(), dims.len());
    let total: usize = dims.iter().product();
    let decode = |mut k: usize| {
        let mut idx = vec![0; dims.len()];
        for (slot, &d) in idx.iter_mut().zip(dims).rev() {
            *slot = k % d;
            k /= d;
        }
        idx
    };
    let probe = |k: usize| {
        let idx = decode(k);
        test(&idx).map(|(lhs, rhs)| Witness {
            indices: labels.iter().map(|l| l.to_string()).zip(idx).collect(),
            lhs,
            rhs,
        })
    };
    let witnesses: Vec<Witness<S>> = if cfg.all_witnesses {
        (0..total).into_par_iter().filter_map(probe).collect()
    } else {
        (0..total).into_par_iter().find_map_first(probe).into_iter().collect()
    };
    PropertyOutcome { name: name.to_string(), passed: witnesses.is_empty(), witnesses, note: None }
}

/// Wraps a vector identity as a failure value: `None` when both sides agree.
pub fn compare<S: PartialEq>(lhs: Vec<S>, rhs: Vec<S>) -> Option<(Vec<S>, Vec<S>)> {
    (lhs != rhs).then_some((lhs, rhs))
}
