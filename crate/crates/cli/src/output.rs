use std::str::FromStr;

use num_traits::One;
use serde_json::{Map, Value};

use crate::basis::{ordered, Expansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected text, json or csv)")),
        }
    }
}

pub fn expansion_json(e: &Expansion) -> Value {
    let mut map = Map::new();
    for (l, c) in ordered(e) {
        map.insert(l.to_string(), Value::String(c.to_string()));
    }
    Value::Object(map)
}

/// A sum such as `s[4] + 2*s[2,2] + -1/2*s[1,1,1,1]`, readable back by the expression parser.
pub fn schur_sum(e: &Expansion) -> String {
    let terms: Vec<String> = ordered(e)
        .iter()
        .map(|(l, c)| if c.is_one() { format!("s{l}") } else { format!("{c}*s{l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn render_expansion(e: &Expansion, format: Format) -> String {
    match format {
        Format::Text => ordered(e).iter().map(|(l, c)| format!("{c}\t{l}\n")).collect(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&expansion_json(e)).expect("json")),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["partition", "coeff"]).expect("csv");
            for (l, c) in ordered(e) {
                w.write_record([l.to_string(), c.to_string()]).expect("csv");
            }
            String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symfun::symfunc::frac;

    fn sample() -> Expansion {
        Expansion::from([("[2,1]".parse().unwrap(), frac(1, 2)), ("[3]".parse().unwrap(), frac(-2, 1))])
    }

    #[test]
    fn formats() {
        assert_eq!(render_expansion(&sample(), Format::Text), "-2\t[3]\n1/2\t[2,1]\n");
        assert_eq!(render_expansion(&sample(), Format::Csv), "partition,coeff\n[3],-2\n\"[2,1]\",1/2\n");
        let v: Value = serde_json::from_str(&render_expansion(&sample(), Format::Json)).unwrap();
        assert_eq!(v["[2,1]"], "1/2");
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["[3]", "[2,1]"]);
    }

    #[test]
    fn schur_sums() {
        assert_eq!(schur_sum(&sample()), "-2*s[3] + 1/2*s[2,1]");
        assert_eq!(schur_sum(&Expansion::from([("[2]".parse().unwrap(), frac(1, 1))])), "s[2]");
        assert_eq!(schur_sum(&Expansion::new()), "0");
    }
}
