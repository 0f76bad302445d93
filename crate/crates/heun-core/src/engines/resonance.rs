//! Bookkeeping for vanishing recursion denominators.

use std::fmt;

/// Offending `(l, m)` pairs whose denominator `b_n^{(l)}(m - n)` vanishes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResonanceReport {
    pub n: i64,
    pub entries: Vec<(usize, i64)>,
}

impl ResonanceReport {
    pub fn new(n: i64) -> Self {
        ResonanceReport { n, entries: Vec::new() }
    }

    pub fn push(&mut self, l: usize, m: i64) {
        if !self.entries.contains(&(l, m)) {
            self.entries.push((l, m));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for ResonanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}, vanishing denominators at (l, m) =", self.n)?;
        for (l, m) in &self.entries {
            write!(f, " ({l}, {m})")?;
        }
        Ok(())
    }
}
