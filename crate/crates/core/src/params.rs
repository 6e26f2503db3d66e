//! Named parameter sets shared by the pair catalog, the polynomial identities
//! and the sweep runner. Insertion order is preserved so reports list
//! parameters in the order the grid produced them.

use std::fmt;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exact::{as_integer, int, rat, Rat};

/// Values swept for free rational parameters: `0, 1, -1, 1/2, -1/2, 3, -5/7`.
pub fn rational_grid() -> Vec<Rat> {
    vec![
        int(0),
        int(1),
        int(-1),
        rat(1, 2),
        rat(-1, 2),
        int(3),
        rat(-5, 7),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rat(Rat),
    Label(String),
}

impl ParamValue {
    fn to_json(&self) -> Value {
        match self {
            ParamValue::Int(i) => Value::from(*i),
            ParamValue::Rat(r) => Value::from(r.to_string()),
            ParamValue::Label(s) => Value::from(s.clone()),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Rat(r) => write!(f, "{r}"),
            ParamValue::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    entries: Vec<(String, ParamValue)>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    fn set(&mut self, name: &str, value: ParamValue) {
        match self.entries.iter_mut().find(|(k, _)| k == name) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((name.to_string(), value)),
        }
    }

    pub fn with_int(mut self, name: &str, v: i64) -> Self {
        self.set(name, ParamValue::Int(v));
        self
    }

    pub fn with_rat(mut self, name: &str, v: Rat) -> Self {
        self.set(name, ParamValue::Rat(v));
        self
    }

    pub fn with_label(mut self, name: &str, v: impl Into<String>) -> Self {
        self.set(name, ParamValue::Label(v.into()));
        self
    }

    /// `self` followed by the entries of `other`, which win on name clashes.
    pub fn merged(&self, other: &Params) -> Params {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.set(k, v.clone());
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.entries.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ParamValue)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Rational value of `name`; integer parameters are widened.
    pub fn rat(&self, name: &str) -> Result<Rat> {
        match self.get(name) {
            Some(ParamValue::Rat(r)) => Ok(r.clone()),
            Some(ParamValue::Int(i)) => Ok(int(*i)),
            Some(ParamValue::Label(_)) => Err(Error::param(name, "expected a number")),
            None => Err(Error::param(name, "missing")),
        }
    }

    pub fn rat_or(&self, name: &str, default: Rat) -> Result<Rat> {
        if self.contains(name) {
            self.rat(name)
        } else {
            Ok(default)
        }
    }

    /// Integer value of `name`; a rational parameter must be integral.
    pub fn int(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(ParamValue::Int(i)) => Ok(*i),
            Some(ParamValue::Rat(r)) => {
                as_integer(r).ok_or_else(|| Error::param(name, format!("{r} is not an integer")))
            }
            Some(ParamValue::Label(_)) => Err(Error::param(name, "expected an integer")),
            None => Err(Error::param(name, "missing")),
        }
    }

    pub fn int_or(&self, name: &str, default: i64) -> Result<i64> {
        if self.contains(name) {
            self.int(name)
        } else {
            Ok(default)
        }
    }

    /// Nonnegative integer value of `name`.
    pub fn count(&self, name: &str) -> Result<usize> {
        let v = self.int(name)?;
        usize::try_from(v).map_err(|_| Error::param(name, format!("{v} must be nonnegative")))
    }

    pub fn label(&self, name: &str) -> Result<&str> {
        match self.get(name) {
            Some(ParamValue::Label(s)) => Ok(s),
            _ => Err(Error::param(name, "expected a label")),
        }
    }

    pub fn to_json(&self) -> Map<String, Value> {
        self.entries
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typed_access() {
        let p = Params::new()
            .with_int("m", 3)
            .with_rat("x", rat(7, 2))
            .with_rat("z", int(-2));
        assert_eq!(p.int("m").unwrap(), 3);
        assert_eq!(p.rat("m").unwrap(), int(3));
        assert_eq!(p.int("z").unwrap(), -2);
        assert!(p.int("x").is_err());
        assert!(p.count("z").is_err());
        assert!(p.rat("missing").is_err());
        assert_eq!(p.to_string(), "m=3,x=7/2,z=-2");
    }

    #[test]
    fn json_keeps_order() {
        let p = Params::new().with_int("n", 4).with_rat("x", rat(-5, 7)).with_label("pair", "lucas");
        let json = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(json, r#"{"n":4,"x":"-5/7","pair":"lucas"}"#);
    }
}
