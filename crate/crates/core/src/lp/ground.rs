use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use super::parse::{SourceClause, SourceProgram};
use super::program::{Clause, LogicProgram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroundError {
    #[error("program uses variables but mentions no constants")]
    NoConstants,
}

impl SourceProgram {
    pub fn is_ground(&self) -> bool {
        self.clauses.iter().all(SourceClause::is_ground)
    }

    /// Constants appearing anywhere in the program, sorted.
    pub fn constants(&self) -> BTreeSet<String> {
        self.clauses.iter().flat_map(|c| c.literals()).flat_map(|l| l.constants().map(str::to_string)).collect()
    }

    /// Naive instantiation: every clause is instantiated over all constants of
    /// the program for each of its variables.
    ///
    /// A ground program is returned clause for clause. Otherwise the resulting
    /// ground clauses are deduplicated, keeping first occurrences.
    pub fn ground(&self) -> Result<LogicProgram, GroundError> {
        let identity = |v: &str| v.to_string();
        if self.is_ground() {
            return Ok(self.clauses.iter().map(|c| instantiate(c, &identity)).collect());
        }
        let constants: Vec<String> = self.constants().into_iter().collect();
        if constants.is_empty() {
            return Err(GroundError::NoConstants);
        }

        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for clause in &self.clauses {
            let mut vars: Vec<&str> = Vec::new();
            for v in clause.literals().flat_map(|l| l.variables()) {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            // odometer over constants^|vars|
            let mut digits = vec![0usize; vars.len()];
            loop {
                let subst = |v: &str| {
                    let i = vars.iter().position(|x| *x == v).expect("variable collected above");
                    constants[digits[i]].clone()
                };
                let ground = instantiate(clause, &subst);
                if seen.insert(ground.clone()) {
                    out.push(ground);
                }
                let mut i = 0;
                loop {
                    if i == digits.len() {
                        break;
                    }
                    digits[i] += 1;
                    if digits[i] < constants.len() {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == digits.len() {
                    break;
                }
            }
        }
        Ok(LogicProgram::new(out))
    }
}

fn instantiate(clause: &SourceClause, subst: &dyn Fn(&str) -> String) -> Clause {
    Clause::new(clause.head.instantiate(subst), clause.body.iter().map(|l| l.instantiate(subst)).collect())
}
