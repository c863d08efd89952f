//! Interned variable names.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// A polynomial variable. Cheap to copy and hash; the name lives in a
/// process-wide interner.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u32);

#[derive(Default)]
struct Interner {
    names: Vec<&'static str>,
    ids: HashMap<&'static str, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static I: OnceLock<RwLock<Interner>> = OnceLock::new();
    I.get_or_init(Default::default)
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarId {
    /// Interns `name`, which must match `[A-Za-z][A-Za-z0-9_]*`.
    pub fn new(name: &str) -> Result<VarId> {
        if !valid_name(name) {
            return Err(Error::InvalidArgument(format!(
                "`{name}` is not a valid variable name"
            )));
        }
        if let Some(&id) = interner().read().unwrap().ids.get(name) {
            return Ok(VarId(id));
        }
        let mut w = interner().write().unwrap();
        if let Some(&id) = w.ids.get(name) {
            return Ok(VarId(id));
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = w.names.len() as u32;
        w.names.push(leaked);
        w.ids.insert(leaked, id);
        Ok(VarId(id))
    }

    /// Interns a name produced by this crate; panics on an invalid name.
    pub fn named(name: &str) -> VarId {
        VarId::new(name).expect("internal variable name")
    }

    pub fn name(self) -> &'static str {
        interner().read().unwrap().names[self.0 as usize]
    }

    /// Order used for rendering: by name, comparing digit runs numerically
    /// so that `x1_2 < x1_10`.
    pub fn cmp_by_name(self, other: VarId) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        natural_cmp(self.name(), other.name())
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].is_ascii_digit() && b[j].is_ascii_digit() {
            let si = i;
            while i < a.len() && a[i].is_ascii_digit() {
                i += 1;
            }
            let sj = j;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            let da = trim_zeros(&a[si..i]);
            let db = trim_zeros(&b[sj..j]);
            let ord = da.len().cmp(&db.len()).then_with(|| da.cmp(db));
            if ord != Ordering::Equal {
                return ord;
            }
        } else {
            let ord = a[i].cmp(&b[j]);
            if ord != Ordering::Equal {
                return ord;
            }
            i += 1;
            j += 1;
        }
    }
    (a.len() - i).cmp(&(b.len() - j)).then_with(|| a.cmp(b))
}

fn trim_zeros(d: &[u8]) -> &[u8] {
    let k = d.iter().take_while(|&&c| c == b'0').count();
    &d[k..]
}

/// `x<i>_<j>`: the variable standing for λ^j of the i-th abstract generator.
pub fn lambda_var(i: usize, j: usize) -> VarId {
    VarId::named(&format!("x{i}_{j}"))
}

/// `s<i>_<j>`: the variable standing for σ^j of the i-th abstract generator.
pub fn sigma_var(i: usize, j: usize) -> VarId {
    VarId::named(&format!("s{i}_{j}"))
}

/// Plain indexed variable `<prefix><k>`, used for universal polynomials.
pub fn indexed_var(prefix: &str, k: usize) -> VarId {
    VarId::named(&format!("{prefix}{k}"))
}
