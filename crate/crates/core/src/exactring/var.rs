use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// An indeterminate, identified by a short name stored inline.
///
/// Names are at most [`Var::MAX_LEN`] bytes so that a `Var` is `Copy` and
/// monomials never allocate per variable. Ordering is lexicographic on the
/// name, which fixes the canonical term order of every polynomial.
#[derive(Clone, Copy)]
pub struct Var {
    len: u8,
    bytes: [u8; Var::MAX_LEN],
}

impl Var {
    pub const MAX_LEN: usize = 15;

    /// Panics if `name` is empty or longer than [`Var::MAX_LEN`] bytes.
    pub fn new(name: &str) -> Self {
        Self::try_new(name).unwrap_or_else(|| panic!("invalid variable name `{name}`"))
    }

    pub fn try_new(name: &str) -> Option<Self> {
        if name.is_empty() || name.len() > Self::MAX_LEN {
            return None;
        }
        let mut bytes = [0u8; Self::MAX_LEN];
        bytes[..name.len()].copy_from_slice(name.as_bytes());
        Some(Var {
            len: name.len() as u8,
            bytes,
        })
    }

    /// `Var::indexed("X", 3)` is `X3`.
    pub fn indexed(prefix: &str, index: usize) -> Self {
        Self::new(&format!("{prefix}{index}"))
    }

    pub fn name(&self) -> &str {
        // Only ever built from a `&str`.
        std::str::from_utf8(&self.bytes[..self.len as usize]).expect("utf-8 name")
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.name() == other.name()
    }
}

impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name().hash(state)
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name().cmp(other.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.name())
    }
}
