//! The category `Δ₃` presented by generators and relations.
//!
//! Objects `𝟣, 𝟤, 𝟥` are indices `0, 1, 2`. Generators are
//! `d⁰, d¹: 𝟣 → 𝟤`, `s⁰: 𝟤 → 𝟣` and `D⁰, D¹, D²: 𝟤 → 𝟥`. Words are written in
//! composition order, so `D1.d0` is `D¹ ∘ d⁰`.
//!
//! Rewriting rules: `s⁰ d^i → id` and `D^t d^k → D^k d^{t-1}` for `t > k`.
//! Every rule lowers the pair (word length, D-superscript) lexicographically,
//! so rewriting terminates; confluence is checked exhaustively by
//! [`check_confluence`]. Nothing leaves `𝟥`, so `hom(𝟥, 𝟤)` is empty and
//! `Δ₃` is not a full subcategory of `Δ`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fincat::FinCategory;

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    d0,
    d1,
    s0,
    D0,
    D1,
    D2,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::d0, Gen::d1, Gen::s0, Gen::D0, Gen::D1, Gen::D2];

    /// `(dom, cod)`.
    pub fn typing(self) -> (usize, usize) {
        match self {
            Gen::d0 | Gen::d1 => (0, 1),
            Gen::s0 => (1, 0),
            Gen::D0 | Gen::D1 | Gen::D2 => (1, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::d0 => "d0",
            Gen::d1 => "d1",
            Gen::s0 => "s0",
            Gen::D0 => "D0",
            Gen::D1 => "D1",
            Gen::D2 => "D2",
        }
    }

    pub fn parse(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }

    fn big_index(self) -> Option<usize> {
        match self {
            Gen::D0 => Some(0),
            Gen::D1 => Some(1),
            Gen::D2 => Some(2),
            _ => None,
        }
    }

    fn small_index(self) -> Option<usize> {
        match self {
            Gen::d0 => Some(0),
            Gen::d1 => Some(1),
            _ => None,
        }
    }

    fn big(i: usize) -> Gen {
        [Gen::D0, Gen::D1, Gen::D2][i]
    }

    fn small(i: usize) -> Gen {
        [Gen::d0, Gen::d1][i]
    }
}

/// A morphism of `Δ₃`: typed word over the generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Delta3Morphism {
    pub dom: usize,
    pub cod: usize,
    pub word: Vec<Gen>,
}

impl fmt::Display for Delta3Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "id{}", self.dom + 1)
        } else {
            let names: Vec<&str> = self.word.iter().map(|g| g.name()).collect();
            write!(f, "{}", names.join("."))
        }
    }
}

/// Types a word; `dom_hint` is needed for the empty word.
pub fn typecheck(word: &[Gen], dom_hint: Option<usize>) -> Result<(usize, usize)> {
    if word.is_empty() {
        let x = dom_hint.ok_or_else(|| Error::Invalid("empty word needs an object".into()))?;
        return Ok((x, x));
    }
    for w in word.windows(2) {
        if w[0].typing().0 != w[1].typing().1 {
            return Err(Error::Invalid(format!("untypable word at {}.{}", w[0].name(), w[1].name())));
        }
    }
    Ok((word[word.len() - 1].typing().0, word[0].typing().1))
}

/// One rewrite at position `i` (acting on letters `i, i+1`), if a rule applies.
fn rewrite_at(word: &[Gen], i: usize) -> Option<Vec<Gen>> {
    let (a, b) = (word[i], word[i + 1]);
    let replacement: Vec<Gen> = if a == Gen::s0 && b.small_index().is_some() {
        vec![]
    } else if let (Some(t), Some(k)) = (a.big_index(), b.small_index()) {
        if t > k {
            vec![Gen::big(k), Gen::small(t - 1)]
        } else {
            return None;
        }
    } else {
        return None;
    };
    let mut out = word[..i].to_vec();
    out.extend(replacement);
    out.extend_from_slice(&word[i + 2..]);
    Some(out)
}

/// The termination measure: (length, sum of D-superscripts).
pub fn measure(word: &[Gen]) -> (usize, usize) {
    (word.len(), word.iter().filter_map(|g| g.big_index()).sum())
}

/// Leftmost rewriting to normal form.
pub fn normalize(word: &[Gen], dom_hint: Option<usize>) -> Result<Delta3Morphism> {
    let (dom, cod) = typecheck(word, dom_hint)?;
    let mut w = word.to_vec();
    'again: loop {
        for i in 0..w.len().saturating_sub(1) {
            if let Some(next) = rewrite_at(&w, i) {
                debug_assert!(measure(&next) < measure(&w));
                w = next;
                continue 'again;
            }
        }
        break;
    }
    Ok(Delta3Morphism { dom, cod, word: w })
}

/// Every normal form reachable from `word` under all rewriting strategies.
pub fn all_normal_forms(word: &[Gen]) -> BTreeSet<Vec<Gen>> {
    let mut out = BTreeSet::new();
    let mut stack = vec![word.to_vec()];
    let mut seen = BTreeSet::new();
    while let Some(w) = stack.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        let succ: Vec<Vec<Gen>> = (0..w.len().saturating_sub(1)).filter_map(|i| rewrite_at(&w, i)).collect();
        if succ.is_empty() {
            out.insert(w);
        } else {
            stack.extend(succ);
        }
    }
    out
}

/// All typable non-empty words of length at most `max_len`.
pub fn typable_words(max_len: usize) -> Vec<Vec<Gen>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Gen>> = Gen::ALL.iter().map(|g| vec![*g]).collect();
    for _ in 0..max_len {
        out.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for w in &layer {
            for g in Gen::ALL {
                // prepend g: needs dom g = cod w
                if g.typing().0 == w[0].typing().1 {
                    let mut v = vec![g];
                    v.extend_from_slice(w);
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    out
}

/// Confluence on typable words up to `max_len`: the first word with two
/// distinct normal forms, if any, and the number of words checked.
pub fn check_confluence(max_len: usize) -> (Option<Vec<Gen>>, usize) {
    let words = typable_words(max_len);
    let n = words.len();
    for w in words {
        if all_normal_forms(&w).len() != 1 {
            return (Some(w), n);
        }
    }
    (None, n)
}

/// `Δ₃` materialized: a table category plus the normal form of each id.
pub struct Delta3 {
    pub category: FinCategory,
    pub morphisms: Vec<Delta3Morphism>,
    index: HashMap<Delta3Morphism, usize>,
}

impl Delta3 {
    /// Closes the generators and identities under composition and normal forms.
    fn build() -> Delta3 {
        let mut set: BTreeSet<Delta3Morphism> = BTreeSet::new();
        for x in 0..3 {
            set.insert(Delta3Morphism { dom: x, cod: x, word: vec![] });
        }
        for g in Gen::ALL {
            set.insert(normalize(&[g], None).unwrap());
        }
        loop {
            let cur: Vec<Delta3Morphism> = set.iter().cloned().collect();
            let before = set.len();
            for f in &cur {
                for g in &cur {
                    if f.cod == g.dom {
                        let mut w = g.word.clone();
                        w.extend_from_slice(&f.word);
                        set.insert(normalize(&w, Some(f.dom)).unwrap());
                    }
                }
            }
            if set.len() == before {
                break;
            }
        }
        let mut morphisms: Vec<Delta3Morphism> = set.into_iter().collect();
        morphisms.sort_by(|a, b| (a.dom, a.cod, a.word.len(), &a.word).cmp(&(b.dom, b.cod, b.word.len(), &b.word)));
        let index: HashMap<Delta3Morphism, usize> = morphisms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let typing: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
        let ids: Vec<usize> = (0..3).map(|x| index[&Delta3Morphism { dom: x, cod: x, word: vec![] }]).collect();
        let category = FinCategory::from_fn(3, &typing, &ids, |g, f| {
            let mut w = morphisms[g].word.clone();
            w.extend_from_slice(&morphisms[f].word);
            index[&normalize(&w, Some(morphisms[f].dom)).unwrap()]
        })
        .expect("Δ₃ tables");
        Delta3 { category, morphisms, index }
    }

    /// The shared instance.
    pub fn get() -> &'static Delta3 {
        static D: OnceLock<Delta3> = OnceLock::new();
        D.get_or_init(Delta3::build)
    }

    pub fn id_of(&self, m: &Delta3Morphism) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Id of the normal form of a word.
    pub fn word_id(&self, word: &[Gen], dom_hint: Option<usize>) -> Result<usize> {
        let m = normalize(word, dom_hint)?;
        Ok(self.index[&m])
    }

    pub fn gen(&self, g: Gen) -> usize {
        self.word_id(&[g], None).unwrap()
    }

    pub fn identity(&self, x: usize) -> usize {
        self.category.identity_of(x)
    }

    pub fn count(&self) -> usize {
        self.morphisms.len()
    }

    /// `|hom(x, y)|` for all pairs.
    pub fn hom_sizes(&self) -> [[usize; 3]; 3] {
        let mut out = [[0; 3]; 3];
        for m in &self.morphisms {
            out[m.dom][m.cod] += 1;
        }
        out
    }

    /// Parses `D1.d0`, `s0` or `id1`/`id2`/`id3`.
    pub fn parse_word(&self, s: &str) -> Result<usize> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("id") {
            return match rest {
                "1" => Ok(self.identity(0)),
                "2" => Ok(self.identity(1)),
                "3" => Ok(self.identity(2)),
                _ => Err(Error::Invalid(format!("unknown object in {s}"))),
            };
        }
        let gens: Option<Vec<Gen>> = s.split('.').map(|t| Gen::parse(t.trim())).collect();
        let gens = gens.ok_or_else(|| Error::Invalid(format!("unknown generator in {s}")))?;
        self.word_id(&gens, None)
    }

    pub fn name(&self, id: usize) -> String {
        self.morphisms[id].to_string()
    }

    /// The formal dual, same ids.
    pub fn opposite(&self) -> FinCategory {
        self.category.opposite()
    }

    /// Composable pairs `(h, g)` meaning `h ∘ g`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.count();
        let mut out = Vec::new();
        for h in 0..n {
            for g in 0..n {
                if self.morphisms[g].cod == self.morphisms[h].dom {
                    out.push((h, g));
                }
            }
        }
        out
    }
}
