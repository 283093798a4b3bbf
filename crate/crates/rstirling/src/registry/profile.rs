//! Range profiles: per-identity, per-parameter sweep caps.
//!
//! A profile assigns every index parameter an inclusive upper bound:
//! the default cap unless an `ID.param = cap` override applies.
//! Three built-ins are provided — `smoke` (caps at 4, seconds),
//! `desk` (caps 8–12, the acceptance ranges), `deep` (caps up to 16,
//! minutes) — and arbitrary profiles can be loaded from a plain-text
//! config:
//!
//! ```text
//! # lines starting with # are comments
//! name = my-profile
//! default = 6
//! only = PROP-4, REM2-N1      # optional: restrict the suite
//! PROP-4.m = 10
//! PROP-4.n = 8
//! ```

use std::collections::{BTreeMap, BTreeSet};

/// Sweep bounds for the verification engine.
#[derive(Clone, Debug)]
pub struct Profile {
    pub name: String,
    default_cap: usize,
    overrides: BTreeMap<String, BTreeMap<String, usize>>,
    /// When present, `verify_suite` runs only these ids.
    selection: Option<BTreeSet<String>>,
}

impl Profile {
    /// A uniform profile with the same cap on every index parameter.
    pub fn uniform(name: &str, default_cap: usize) -> Profile {
        Profile {
            name: name.to_string(),
            default_cap,
            overrides: BTreeMap::new(),
            selection: None,
        }
    }

    /// Adds (or replaces) one `id.param` cap override.
    pub fn with_cap(mut self, id: &str, param: &str, cap: usize) -> Profile {
        self.overrides
            .entry(id.to_string())
            .or_default()
            .insert(param.to_string(), cap);
        self
    }

    /// Restricts the suite to the given ids.
    pub fn with_selection<I: IntoIterator<Item = S>, S: Into<String>>(
        mut self,
        ids: I,
    ) -> Profile {
        self.selection = Some(ids.into_iter().map(Into::into).collect());
        self
    }

    /// The cap for one identity parameter.
    pub fn cap(&self, id: &str, param: &str) -> usize {
        self.overrides
            .get(id)
            .and_then(|m| m.get(param))
            .copied()
            .unwrap_or(self.default_cap)
    }

    /// Whether the suite includes this identity.
    pub fn selects(&self, id: &str) -> bool {
        self.selection.as_ref().map_or(true, |s| s.contains(id))
    }

    /// Small ranges for a fast end-to-end shakeout.
    pub fn smoke() -> Profile {
        Profile::uniform("smoke", 4)
    }

    /// The desk-scale ranges used by the acceptance checks.
    pub fn desk() -> Profile {
        Profile::uniform("desk", 8)
            .with_cap("PROP-4", "m", 10)
            .with_cap("PROP-4", "i", 10)
            .with_cap("PROP-4", "n", 8)
            .with_cap("REM2-N1", "m", 12)
            .with_cap("REM2-RECUR", "m", 8)
            .with_cap("REM2-RECUR", "n", 6)
            .with_cap("HS-KARGIN", "k", 6)
            .with_cap("HS-KARGIN", "m", 5)
            .with_cap("HS-KARGIN", "n", 8)
            .with_cap("HS-CERE", "k", 6)
            .with_cap("HS-CERE", "m", 5)
            .with_cap("HS-CERE", "n", 8)
            .with_cap("R-TWOFORMS", "m", 10)
            .with_cap("R-TWOFORMS", "i", 10)
            .with_cap("RBAR-SHIFT", "m", 10)
            .with_cap("RBAR-SHIFT", "i", 10)
            .with_cap("RBAR-PRODUCT", "m", 10)
            .with_cap("HH-DERIV-12", "j", 10)
            .with_cap("HH-DERIV-12", "i", 10)
            .with_cap("HH-DERIV-13", "j", 10)
            .with_cap("HH-DERIV-13", "i", 10)
            .with_cap("BER-23", "k", 10)
            .with_cap("BERN-SHIFT", "l", 10)
            .with_cap("BERN-SHIFT", "r", 10)
            .with_cap("BERN-SHIFT", "n", 10)
            .with_cap("FIN4", "l", 10)
            .with_cap("FIN4", "r", 10)
            .with_cap("FIN4", "n", 10)
            .with_cap("HORIZ-GF", "m", 10)
            .with_cap("KOLBIG", "j", 8)
            .with_cap("KOLBIG", "q", 10)
            .with_cap("MYRES2-17", "j", 10)
            .with_cap("MYRES2-17", "i", 10)
            .with_cap("MYRES2-17", "r", 5)
            .with_cap("P-R0", "j", 10)
            .with_cap("P-R0", "i", 10)
            .with_cap("EGF-RSTIRLING", "i", 6)
            .with_cap("EGF-RSTIRLING", "r", 4)
            .with_cap("EGF-RSTIRLING", "j", 11)
            .with_cap("HB-KIM", "k", 10)
            .with_cap("HB-KIM", "i", 5)
            .with_cap("HB-SRIV", "k", 10)
            .with_cap("HB-SRIV", "i", 5)
    }

    /// Larger ranges; runs in minutes. The records with four or five
    /// swept indices, and the series records whose cost grows with the
    /// truncation order, keep slightly smaller caps so the whole suite
    /// stays within that budget.
    pub fn deep() -> Profile {
        Profile::uniform("deep", 16)
            .with_cap("CONV-52", "r", 8)
            .with_cap("CONV-52", "s", 8)
            .with_cap("CONV-52", "j", 12)
            .with_cap("CONV-52", "i", 12)
            .with_cap("FIN1", "q", 8)
            .with_cap("FIN1", "l", 10)
            .with_cap("FIN1", "r", 10)
            .with_cap("FIN1", "n", 12)
            .with_cap("FIN2", "q", 8)
            .with_cap("FIN2", "l", 10)
            .with_cap("FIN2", "r", 10)
            .with_cap("FIN2", "n", 12)
            .with_cap("FIN3", "q", 8)
            .with_cap("FIN3", "l", 10)
            .with_cap("FIN3", "r", 10)
            .with_cap("FIN3", "n", 12)
            .with_cap("WANG-WA1", "s", 10)
            .with_cap("WANG-WA-COMBINED", "s", 10)
            .with_cap("IT6", "i", 8)
            .with_cap("IT7", "i", 8)
            .with_cap("W1508", "i", 8)
            .with_cap("HS-KARGIN", "k", 8)
            .with_cap("HS-CERE", "k", 8)
            .with_cap("EGF-RSTIRLING", "j", 15)
            .with_cap("EGF-RSTIRLING", "i", 8)
            .with_cap("EGF-RSTIRLING", "r", 8)
            .with_cap("EGF-PNUMBER", "j", 15)
            .with_cap("EGF-PNUMBER", "i", 8)
            .with_cap("EGF-PNUMBER", "r", 8)
            .with_cap("EGF-LOGPOW", "j", 15)
            .with_cap("EGF-LOGPOW", "i", 8)
            .with_cap("MACLAURIN-LOG", "j", 15)
    }

    /// Resolves a built-in profile by name.
    pub fn builtin(name: &str) -> Option<Profile> {
        match name {
            "smoke" => Some(Profile::smoke()),
            "desk" => Some(Profile::desk()),
            "deep" => Some(Profile::deep()),
            _ => None,
        }
    }

    /// Parses the plain-text profile config format.
    pub fn parse(text: &str) -> Result<Profile, String> {
        let mut profile = Profile::uniform("custom", 8);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "name" => profile.name = value.to_string(),
                "default" => {
                    profile.default_cap = value
                        .parse()
                        .map_err(|_| format!("line {}: bad default cap `{value}`", lineno + 1))?;
                }
                "only" => {
                    let ids: BTreeSet<String> = value
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect();
                    profile.selection = Some(ids);
                }
                _ => {
                    let (id, param) = key.split_once('.').ok_or_else(|| {
                        format!("line {}: expected `ID.param = cap`, got `{key}`", lineno + 1)
                    })?;
                    let cap: usize = value
                        .parse()
                        .map_err(|_| format!("line {}: bad cap `{value}`", lineno + 1))?;
                    profile
                        .overrides
                        .entry(id.trim().to_string())
                        .or_default()
                        .insert(param.trim().to_string(), cap);
                }
            }
        }
        Ok(profile)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_lookup() {
        assert_eq!(Profile::builtin("smoke").unwrap().cap("ANY", "m"), 4);
        assert_eq!(Profile::builtin("desk").unwrap().cap("PROP-4", "m"), 10);
        assert_eq!(Profile::builtin("desk").unwrap().cap("PROP-4", "q"), 8);
        assert!(Profile::builtin("nope").is_none());
    }

    #[test]
    fn parse_config() {
        let text = "\
# a comment
name = tiny
default = 3
PROP-4.m = 7   # trailing comment
PROP-4.n = 2
";
        let p = Profile::parse(text).unwrap();
        assert_eq!(p.name, "tiny");
        assert_eq!(p.cap("PROP-4", "m"), 7);
        assert_eq!(p.cap("PROP-4", "n"), 2);
        assert_eq!(p.cap("PROP-4", "i"), 3);
        assert!(p.selects("ANY"));
    }

    #[test]
    fn parse_selection() {
        let p = Profile::parse("only = A, B\n").unwrap();
        assert!(p.selects("A") && p.selects("B") && !p.selects("C"));
        let empty = Profile::parse("only =\n").unwrap();
        assert!(!empty.selects("A"));
    }

    #[test]
    fn parse_errors() {
        assert!(Profile::parse("default ten").is_err());
        assert!(Profile::parse("default = ten").is_err());
        assert!(Profile::parse("PROP-4 = 3").is_err());
    }
}
