//! Per-process caches for the built models and their symmetry groups.
//! Construction is pure and deterministic, so sharing is safe.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::polytope::{Polytope, PolytopeKind};
use crate::symmetry::{polytope_group, SymmetryGroup};

static POLYTOPES: OnceLock<Mutex<HashMap<PolytopeKind, Arc<Polytope>>>> = OnceLock::new();
static GROUPS: OnceLock<Mutex<HashMap<PolytopeKind, Arc<SymmetryGroup>>>> = OnceLock::new();

/// The built polytope model, constructed once per process.
pub fn model_for(kind: PolytopeKind) -> Result<Arc<Polytope>> {
    let cache = POLYTOPES.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(p) = guard.get(&kind) {
            return Ok(Arc::clone(p));
        }
    }
    let built = Arc::new(Polytope::build(kind)?);
    let mut guard = cache.lock().unwrap();
    Ok(Arc::clone(guard.entry(kind).or_insert(built)))
}

/// The rotation group of the model, constructed once per process.
pub fn group_for(kind: PolytopeKind) -> Result<Arc<SymmetryGroup>> {
    let cache = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(g) = guard.get(&kind) {
            return Ok(Arc::clone(g));
        }
    }
    let poly = model_for(kind)?;
    let built = Arc::new(polytope_group(&poly)?);
    let mut guard = cache.lock().unwrap();
    Ok(Arc::clone(guard.entry(kind).or_insert(built)))
}
