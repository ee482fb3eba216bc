use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::PolyError;

/// Maximum number of user-declared variables.
pub const MAX_VARIABLES: usize = 12;

/// Ambient ring: a field and an ordered list of variable names.
///
/// Cloning is cheap. Two rings are equal when they declare the same variables
/// over the same field.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    variables: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new<S: AsRef<str>>(variables: &[S], field: Field) -> Result<Ring, PolyError> {
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        if variables.is_empty() || variables.len() > MAX_VARIABLES {
            return Err(PolyError::InvalidRing(format!(
                "expected between 1 and {MAX_VARIABLES} variables, got {}",
                variables.len()
            )));
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if variables[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring(Arc::new(RingData { variables, field })))
    }

    /// Rational-coefficient ring over the given variables.
    pub fn rational<S: AsRef<str>>(variables: &[S]) -> Result<Ring, PolyError> {
        Ring::new(variables, Field::Rational)
    }

    /// Same ring with one extra variable prepended. The extra name is not a
    /// valid identifier, so it can never be parsed or collide with user names.
    pub(crate) fn with_auxiliary(&self) -> Ring {
        let mut variables = vec!["%t".to_string()];
        variables.extend(self.0.variables.iter().cloned());
        Ring(Arc::new(RingData {
            variables,
            field: self.0.field,
        }))
    }

    /// Same variables over the rationals.
    pub(crate) fn rational_shadow(&self) -> Ring {
        if self.0.field == Field::Rational {
            return self.clone();
        }
        Ring(Arc::new(RingData {
            variables: self.0.variables.clone(),
            field: Field::Rational,
        }))
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[[{}]]", self.0.field, self.0.variables.join(", "))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
