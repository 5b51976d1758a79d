//! Small helpers for hand-validated JSON input. Every accessor takes the
//! JSON pointer of the value so schema errors can name the offending path.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

pub(crate) fn child(ptr: &str, key: impl std::fmt::Display) -> String {
    format!("{ptr}/{key}")
}

pub(crate) fn field<'a>(v: &'a Value, ptr: &str, key: &str) -> Result<&'a Value> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected an object"))?;
    obj.get(key)
        .ok_or_else(|| Error::schema(child(ptr, key), "missing required field"))
}

pub(crate) fn opt_field<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.as_object().and_then(|o| o.get(key)).filter(|x| !x.is_null())
}

pub(crate) fn ptr_or_root(ptr: &str) -> String {
    if ptr.is_empty() {
        "/".into()
    } else {
        ptr.into()
    }
}

pub(crate) fn as_u64(v: &Value, ptr: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected a nonnegative integer"))
}

pub(crate) fn as_usize(v: &Value, ptr: &str) -> Result<usize> {
    Ok(as_u64(v, ptr)? as usize)
}

pub(crate) fn as_i64(v: &Value, ptr: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected an integer"))
}

pub(crate) fn as_bool(v: &Value, ptr: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected a boolean"))
}

pub(crate) fn as_str<'a>(v: &'a Value, ptr: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected a string"))
}

pub(crate) fn as_array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected an array"))
}

/// Rationals are written as strings `"p/q"` / `"p"`; bare integers are accepted too.
pub(crate) fn as_rational(v: &Value, ptr: &str) -> Result<Rational> {
    match v {
        Value::String(s) => {
            parse_rational(s).map_err(|e| Error::schema(ptr_or_root(ptr), e.to_string()))
        }
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(Error::schema(
            ptr_or_root(ptr),
            "expected a rational written as \"p/q\" or an integer",
        )),
    }
}
