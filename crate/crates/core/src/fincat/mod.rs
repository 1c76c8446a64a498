//! Categories, functors, natural transformations and adjunctions.
//!
//! Everything is phrased against the [`Category`] trait. Genuinely finite
//! categories are stored as tables in [`FinCategory`]; infinite ones (slices
//! of finite sets, set-valued diagrams) implement the trait lazily and expose
//! a bounded enumeration through [`Category::objects`]. Every checker in this
//! module quantifies over that enumeration.

mod cats;
mod functor;
mod laws;
mod limits;
mod materialize;
mod op;
mod power;
mod search;

pub mod catalog;

pub use cats::{kernel_pair, Cats};
pub use functor::{compose2, Adjunction, Compose2, FinFunctor, Functor, NatTrans};
pub use laws::{
    all_morphisms, check_adjunction, check_category, check_functor, check_natural, functors_equal,
    nat_equal, validate_category, LawReport,
};
pub use limits::{
    is_limit_cone, search_colimit, search_comediate, search_limit, search_mediate, Cone, Diagram,
    Limits,
};
pub use materialize::{materialize, Materialized};
pub use op::Op;
pub use power::PowerCat;
pub use search::{
    all_functors, all_natural_transformations, check_equivalence, find_left_adjoint, find_natural_iso, is_conservative,
    random_functor,
    EquivalenceReport,
};

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Bounds shared by object and morphism types.
pub trait Cell: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static {}
impl<T: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static> Cell for T {}

/// A category. `compose(g, f)` is `g ∘ f` and requires `cod f = dom g`.
///
/// `objects` is the enumeration used by checkers and searches. For finite
/// categories it lists every object; for infinite ones it is bounded and the
/// documentation of the implementor says what the bound covers.
pub trait Category: Send + Sync + 'static {
    type Obj: Cell;
    type Mor: Cell;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, x: &Self::Obj) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    /// Morphisms `x → y` in a deterministic order.
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;
    fn objects(&self) -> Vec<Self::Obj>;

    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let (x, y) = (self.dom(f), self.cod(f));
        let (ix, iy) = (self.id(&x), self.id(&y));
        self.hom(&y, &x)
            .into_iter()
            .find(|g| self.compose(g, f) == ix && self.compose(f, g) == iy)
    }

    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// Isomorphisms `x → y`, in hom order.
    fn isos(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        self.hom(x, y).into_iter().filter(|f| self.is_iso(f)).collect()
    }

    fn is_isomorphic(&self, x: &Self::Obj, y: &Self::Obj) -> bool {
        !self.isos(x, y).is_empty()
    }

    /// A pseudo-randomly chosen isomorphism out of `x`, determined by `key`.
    fn pick_iso(&self, x: &Self::Obj, key: u64) -> Self::Mor {
        let mut all = Vec::new();
        for y in self.objects() {
            all.extend(self.isos(x, &y));
        }
        if all.is_empty() {
            self.id(x)
        } else {
            all.swap_remove((key % all.len() as u64) as usize)
        }
    }
}

/// A finite category stored as tables. Objects and morphisms are indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinCategory {
    object_count: usize,
    dom: Vec<usize>,
    cod: Vec<usize>,
    identity: Vec<usize>,
    comp: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
    inv: Vec<Option<usize>>,
}

impl FinCategory {
    /// Builds the tables without checking any law. Indices are range-checked.
    ///
    /// `morphisms[i] = (dom, cod)` and `composition` lists `(g, f, g∘f)`.
    pub fn from_tables(
        object_count: usize,
        morphisms: &[(usize, usize)],
        identity: &[usize],
        composition: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let m = morphisms.len();
        if identity.len() != object_count {
            return Err(Error::Structural(format!(
                "identity table has {} entries for {} objects",
                identity.len(),
                object_count
            )));
        }
        for (i, &(d, c)) in morphisms.iter().enumerate() {
            if d >= object_count || c >= object_count {
                return Err(Error::Structural(format!("morphism {i} has object index out of range")));
            }
        }
        for (x, &i) in identity.iter().enumerate() {
            if i >= m {
                return Err(Error::Structural(format!("identity of object {x} out of range")));
            }
        }
        let mut comp = vec![None; m * m];
        for &(g, f, h) in composition {
            if g >= m || f >= m || h >= m {
                return Err(Error::Structural(format!("composition entry ({g},{f}) out of range")));
            }
            comp[g * m + f] = Some(h);
        }
        let mut c = FinCategory {
            object_count,
            dom: morphisms.iter().map(|p| p.0).collect(),
            cod: morphisms.iter().map(|p| p.1).collect(),
            identity: identity.to_vec(),
            comp,
            homs: Vec::new(),
            inv: Vec::new(),
        };
        c.index();
        Ok(c)
    }

    /// Builds a category from a composition function on composable pairs.
    pub fn from_fn(
        object_count: usize,
        morphisms: &[(usize, usize)],
        identity: &[usize],
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for g in 0..morphisms.len() {
            for f in 0..morphisms.len() {
                if morphisms[f].1 == morphisms[g].0 {
                    entries.push((g, f, compose(g, f)));
                }
            }
        }
        Self::from_tables(object_count, morphisms, identity, &entries)
    }

    /// Like [`FinCategory::from_tables`] but rejects data violating a law.
    pub fn build(
        object_count: usize,
        morphisms: &[(usize, usize)],
        identity: &[usize],
        composition: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let c = Self::from_tables(object_count, morphisms, identity, composition)?;
        let report = validate_category(&c);
        if report.is_ok() {
            Ok(c)
        } else {
            Err(Error::Invalid(report.violations.join("; ")))
        }
    }

    fn index(&mut self) {
        let n = self.object_count;
        let m = self.dom.len();
        let mut homs = vec![Vec::new(); n * n];
        for f in 0..m {
            homs[self.dom[f] * n + self.cod[f]].push(f);
        }
        self.homs = homs;
        let mut inv = vec![None; m];
        for f in 0..m {
            let (x, y) = (self.dom[f], self.cod[f]);
            for &g in &self.homs[y * n + x] {
                if self.comp[g * m + f] == Some(self.identity[x])
                    && self.comp[f * m + g] == Some(self.identity[y])
                {
                    inv[f] = Some(g);
                    break;
                }
            }
        }
        self.inv = inv;
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn morphism_count(&self) -> usize {
        self.dom.len()
    }

    pub fn identity_of(&self, x: usize) -> usize {
        self.identity[x]
    }

    /// The composition table entry for `(g, f)`, if any.
    pub fn composite(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.dom.len() + f]
    }

    pub fn morphisms(&self) -> Vec<(usize, usize)> {
        self.dom.iter().copied().zip(self.cod.iter().copied()).collect()
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.dom[f]] == f
    }

    /// All `(g, f, g∘f)` entries in lexicographic `(g, f)` order.
    pub fn composition_entries(&self) -> Vec<(usize, usize, usize)> {
        let m = self.dom.len();
        let mut out = Vec::new();
        for g in 0..m {
            for f in 0..m {
                if let Some(h) = self.comp[g * m + f] {
                    out.push((g, f, h));
                }
            }
        }
        out
    }

    /// The formal dual: same ids, domains and codomains swapped.
    pub fn opposite(&self) -> FinCategory {
        let morphisms: Vec<(usize, usize)> = self.cod.iter().copied().zip(self.dom.iter().copied()).collect();
        let entries: Vec<(usize, usize, usize)> =
            self.composition_entries().into_iter().map(|(g, f, h)| (f, g, h)).collect();
        FinCategory::from_tables(self.object_count, &morphisms, &self.identity, &entries)
            .expect("dual of well-formed tables is well formed")
    }

    /// The discrete category on `n` objects.
    pub fn discrete(n: usize) -> FinCategory {
        let morphisms: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        let ids: Vec<usize> = (0..n).collect();
        FinCategory::from_fn(n, &morphisms, &ids, |g, _| g).expect("discrete")
    }

    /// The terminal category.
    pub fn terminal() -> FinCategory {
        Self::discrete(1)
    }
}

impl Category for FinCategory {
    type Obj = usize;
    type Mor = usize;

    fn dom(&self, f: &usize) -> usize {
        self.dom[*f]
    }
    fn cod(&self, f: &usize) -> usize {
        self.cod[*f]
    }
    fn id(&self, x: &usize) -> usize {
        self.identity[*x]
    }
    fn compose(&self, g: &usize, f: &usize) -> usize {
        self.comp[*g * self.dom.len() + *f]
            .unwrap_or_else(|| panic!("composite of {g} and {f} is undefined"))
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<usize> {
        self.homs[*x * self.object_count + *y].clone()
    }
    fn objects(&self) -> Vec<usize> {
        (0..self.object_count).collect()
    }
    fn inverse(&self, f: &usize) -> Option<usize> {
        self.inv[*f]
    }
}

impl Limits for FinCategory {}
