use std::cmp::Ordering;

use crate::ring::{Monomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// One block of a (possibly block-elimination) term order: an inner order on
/// an explicit variable sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub kind: OrderKind,
    pub vars: Vec<Var>,
}

/// A global monomial order given as a sequence of blocks compared
/// lexicographically. Every order built here is multiplicative and has 1 as
/// its minimum, so Groebner computations terminate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    blocks: Vec<OrderBlock>,
}

impl TermOrder {
    pub fn lex(vars: Vec<Var>) -> TermOrder {
        TermOrder {
            blocks: vec![OrderBlock {
                kind: OrderKind::Lex,
                vars,
            }],
        }
    }

    pub fn grevlex(vars: Vec<Var>) -> TermOrder {
        TermOrder {
            blocks: vec![OrderBlock {
                kind: OrderKind::GrevLex,
                vars,
            }],
        }
    }

    /// Block order eliminating `front`: any monomial involving a front
    /// variable is larger than any monomial in the back block alone.
    pub fn elimination(front: Vec<Var>, back: Vec<Var>) -> TermOrder {
        TermOrder {
            blocks: vec![
                OrderBlock {
                    kind: OrderKind::GrevLex,
                    vars: front,
                },
                OrderBlock {
                    kind: OrderKind::GrevLex,
                    vars: back,
                },
            ],
        }
    }

    pub fn from_blocks(blocks: Vec<OrderBlock>) -> TermOrder {
        TermOrder { blocks }
    }

    pub fn blocks(&self) -> &[OrderBlock] {
        &self.blocks
    }

    pub fn variables(&self) -> impl Iterator<Item = Var> + '_ {
        self.blocks.iter().flat_map(|b| b.vars.iter().copied())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for block in &self.blocks {
            let ord = match block.kind {
                OrderKind::Lex => cmp_lex(&block.vars, a, b),
                OrderKind::GrevLex => cmp_grevlex(&block.vars, a, b),
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn cmp_lex(vars: &[Var], a: &Monomial, b: &Monomial) -> Ordering {
    for v in vars {
        let ord = a.exponent(*v).cmp(&b.exponent(*v));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(vars: &[Var], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|v| a.exponent(*v)).sum();
    let db: u32 = vars.iter().map(|v| b.exponent(*v)).sum();
    if da != db {
        return da.cmp(&db);
    }
    // Same degree: the monomial with the smaller exponent at the last
    // differing variable is the larger one.
    for v in vars.iter().rev() {
        let (ea, eb) = (a.exponent(*v), b.exponent(*v));
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}
