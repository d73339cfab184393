use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `key=value` options separated by commas outside braces and parentheses.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    entries: BTreeMap<String, String>,
}

impl Options {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for item in split_top_level(text) {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::BadOption(format!("expected key=value, got {item:?}")))?;
            entries.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Options { entries })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get<T>(&self, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        self.raw(key)
            .map(|v| v.parse::<T>().map_err(|e| Error::BadOption(format!("{key}={v}: {e}"))))
            .transpose()
    }

    pub fn with(mut self, key: &str, value: &str) -> Self {
        self.entries.insert(key.into(), value.into());
        self
    }
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}
