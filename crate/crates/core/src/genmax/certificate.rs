use std::fmt;

use crate::elements::Element;
use crate::structure::in_t;
use crate::word::{Token, Word};

/// Which engine finished a maximality run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The commutator had full support and `c` was the swap `(10 11)`.
    Swap,
    /// The commutator was a 3-cycle of small support.
    ThreeCycle,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Swap => "swap",
            Branch::ThreeCycle => "three-cycle",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A word over `{A, A^-1}` and elements of T claimed to evaluate to `target`,
/// with the intermediate elements of the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub target: Element,
    pub word: Word,
    pub audit: Vec<(String, Element)>,
    pub branch: Option<Branch>,
}

impl Certificate {
    pub fn new(target: Element, word: Word) -> Self {
        Certificate {
            target,
            word,
            audit: Vec::new(),
            branch: None,
        }
    }

    pub fn audit_entry(&self, name: &str) -> Option<&Element> {
        self.audit.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub(crate) fn record(&mut self, name: impl Into<String>, e: &Element) {
        self.audit.push((name.into(), e.clone()));
    }

    /// Appends another audit trail under a name prefix.
    pub(crate) fn absorb_audit(&mut self, prefix: &str, other: &Certificate) {
        for (n, e) in &other.audit {
            self.audit.push((format!("{prefix}.{n}"), e.clone()));
        }
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// Token at this position is not in T.
    NotInT(usize),
    /// Multiplying out failed.
    Evaluation(String),
    /// The product differs from the target.
    WrongProduct(Element),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotInT(i) => write!(f, "token {i} is not an element of T"),
            Rejection::Evaluation(e) => write!(f, "evaluation failed: {e}"),
            Rejection::WrongProduct(p) => {
                write!(f, "word evaluates to [{}], not the target", p.to_line())
            }
        }
    }
}

/// Re-checks T membership of every explicit token, then multiplies the word
/// out with `A` bound to `a` and compares with the target.
pub fn check_certificate(cert: &Certificate, a: &Element) -> Result<(), Rejection> {
    for (i, t) in cert.word.tokens().iter().enumerate() {
        if let Token::T(e) = t {
            if !in_t(e) {
                return Err(Rejection::NotInT(i));
            }
        }
    }
    let product = cert
        .word
        .evaluate(a)
        .map_err(|e| Rejection::Evaluation(e.to_string()))?;
    if product != cert.target {
        return Err(Rejection::WrongProduct(product));
    }
    Ok(())
}

pub fn verify_certificate(cert: &Certificate, a: &Element) -> bool {
    check_certificate(cert, a).is_ok()
}
