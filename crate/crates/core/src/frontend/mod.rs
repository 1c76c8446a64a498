//! The `.lcat` input language and the command line driver.
//!
//! A document is a sequence of named declarations:
//!
//! ```text
//! category C { objects: a, b; hom(a, b): f; compose: f . id_a = f; }
//! map p : [2] -> [1] = [0, 0]
//! monoid M2 { 1, e; e . e = e }
//! functor F : C -> D { a -> x; b -> y; f -> u; }
//! nattrans t : F => G { a : u; b : v; }
//! precategory P = sigma(M2)          // also nerve(C), kernel(p), kernel(h)
//! indexed S = slice(bound = 3)       // also fam(bound = N, of = C), diagrams(bound = N, shapes = [C, D])
//! pseudofunctor A = S on P twist 7
//! adjunction L = left_adjoint(F)
//! ```
//!
//! Identities `id_x` are implicit. A composite that is not listed is
//! filled in when its hom-set has a single element. The first element of a
//! monoid is its unit.

pub mod ast;
pub mod cli;
pub mod lexer;
pub mod load;
pub mod parser;
pub mod printer;

pub use ast::Document;
pub use load::{load, load_str, Env, Value};
pub use parser::parse;
pub use printer::print;
