use std::fmt;

use serde::{Deserialize, Serialize};

/// One closed-form claim evaluated on both sides: `expected` is the closed
/// form, `actual` the brute-force value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: &'static str,
    pub expected: i64,
    pub actual: i64,
}

impl Identity {
    pub fn new(name: &'static str, expected: i64, actual: i64) -> Self {
        Identity {
            name,
            expected,
            actual,
        }
    }

    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds() { "ok" } else { "MISMATCH" };
        write!(
            f,
            "{}: expected {}, actual {} [{}]",
            self.name, self.expected, self.actual, mark
        )
    }
}
