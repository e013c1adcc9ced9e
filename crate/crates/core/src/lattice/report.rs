use std::fmt;

/// Maximum number of witnesses kept per law.
pub const MAX_WITNESSES: usize = 5;

/// A failing instance of a law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub law: String,
    pub elems: Vec<usize>,
    pub labels: Vec<String>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ({})", self.law, self.labels.join(", "))
    }
}

/// Outcome of a batch of checks: named verdicts, witness tuples for every
/// failed law, and free-form notes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    verdicts: Vec<(String, bool)>,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &str, value: bool) {
        match self.verdicts.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.verdicts.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    /// Verdict `name`, panicking if it was never recorded.
    pub fn verdict(&self, name: &str) -> bool {
        self.get(name)
            .unwrap_or_else(|| panic!("no verdict named {name:?}"))
    }

    pub fn verdicts(&self) -> &[(String, bool)] {
        &self.verdicts
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn witnesses_for<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Witness> + 'a {
        self.witnesses.iter().filter(move |w| w.law == law)
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push_witness(&mut self, witness: Witness) {
        self.witnesses.push(witness);
    }

    /// True when every recorded verdict holds.
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v)
    }

    /// Appends the verdicts, witnesses and notes of `other`.
    pub fn merge(&mut self, other: Report) {
        for (name, value) in other.verdicts {
            self.set(&name, value);
        }
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in &self.verdicts {
            writeln!(f, "{name}: {value}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness {w}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
