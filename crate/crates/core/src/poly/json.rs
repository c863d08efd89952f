//! JSON encoding:
//! `{"vars":["L","a1_1"],"terms":[{"c":"3","e":[2,1]}]}` with terms in
//! graded-lex descending order and `vars` in name order.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::var::VarId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolyJson {
        let vars = self.variables();
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermJson {
                c: if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                },
                e: vars.iter().map(|&v| m.exponent(v)).collect(),
            })
            .collect();
        PolyJson {
            vars: vars.iter().map(|v| v.name().to_string()).collect(),
            terms,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial json")
    }

    pub fn from_json(j: &PolyJson) -> Result<Polynomial> {
        let vars: Vec<VarId> = j.vars.iter().map(|n| VarId::new(n)).collect::<Result<_>>()?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.e.len() != vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "term has {} exponents, expected {}",
                    t.e.len(),
                    vars.len()
                )));
            }
            let c: BigRational = t
                .c
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient `{}`", t.c)))?;
            terms.push((Monomial::from_pairs(vars.iter().copied().zip(t.e.iter().copied())), c));
        }
        Ok(Polynomial::from_terms(terms))
    }

    pub fn from_json_str(s: &str) -> Result<Polynomial> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Polynomial::from_json(&j)
    }
}
