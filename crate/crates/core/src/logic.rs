//! Boolean connectives and folds over lists of booleans.

use crate::error::{Error, Result};

/// Binary boolean connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    And,
    Or,
    Xor,
    Xnor,
    Nand,
    Nor,
    Implies,
    Iff,
}

impl Connective {
    pub const ALL: [Connective; 8] = [
        Connective::And,
        Connective::Or,
        Connective::Xor,
        Connective::Xnor,
        Connective::Nand,
        Connective::Nor,
        Connective::Implies,
        Connective::Iff,
    ];

    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            Connective::And => a && b,
            Connective::Or => a || b,
            Connective::Xor => a != b,
            Connective::Xnor => a == b,
            Connective::Nand => !(a && b),
            Connective::Nor => !(a || b),
            Connective::Implies => !a || b,
            Connective::Iff => a == b,
        }
    }

    /// Lower-case function name used by the expression language.
    pub fn name(self) -> &'static str {
        match self {
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Xor => "xor",
            Connective::Xnor => "xnor",
            Connective::Nand => "nand",
            Connective::Nor => "nor",
            Connective::Implies => "implies",
            Connective::Iff => "iff",
        }
    }

    pub fn from_name(name: &str) -> Option<Connective> {
        Connective::ALL.into_iter().find(|c| c.name() == name)
    }
}

pub fn connective(kind: Connective, a: bool, b: bool) -> bool {
    kind.apply(a, b)
}

/// Left fold of `kind` over `xs`. A singleton folds to its only element.
pub fn fold_connective(kind: Connective, xs: &[bool]) -> Result<bool> {
    let (first, rest) = xs.split_first().ok_or(Error::EmptyFold)?;
    Ok(rest.iter().fold(*first, |acc, &x| kind.apply(acc, x)))
}

pub fn negate_list(xs: &[bool]) -> Vec<bool> {
    xs.iter().map(|x| !x).collect()
}
