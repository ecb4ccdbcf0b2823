//! On-disk memo cache.
//!
//! Text file, append-only:
//!
//! ```text
//! smbd-memo v1
//! <key words as hex, comma separated> <maker> <breaker> <check>
//! ```
//!
//! `maker`/`breaker` are a count, `inf`, or `-` for unknown; `check` is the
//! first 16 hex digits of SHA-256 over the rest of the line. A file with a
//! foreign header or any damaged record is ignored as a whole.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::{MemoEntry, Solver};
use crate::count::ExtendedCount;
use crate::hypergraph::StateKey;

pub const CACHE_HEADER: &str = "smbd-memo v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheLoad {
    Loaded(usize),
    Missing,
    Ignored(String),
}

fn check(body: &str) -> String {
    let digest = Sha256::digest(body.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn fmt_value(v: Option<ExtendedCount>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn parse_value(s: &str) -> Option<Option<ExtendedCount>> {
    if s == "-" {
        Some(None)
    } else {
        s.parse().ok().map(Some)
    }
}

fn record_line(key: &StateKey, entry: &MemoEntry) -> String {
    let words: Vec<String> = key.words().iter().map(|w| format!("{w:x}")).collect();
    let body = format!(
        "{} {} {}",
        words.join(","),
        fmt_value(entry.maker),
        fmt_value(entry.breaker)
    );
    let sum = check(&body);
    format!("{body} {sum}")
}

fn parse_record(line: &str) -> Option<(StateKey, MemoEntry)> {
    let (body, sum) = line.rsplit_once(' ')?;
    if check(body) != sum {
        return None;
    }
    let mut fields = body.split(' ');
    let words = fields
        .next()?
        .split(',')
        .map(|w| u64::from_str_radix(w, 16).ok())
        .collect::<Option<Vec<u64>>>()?;
    let maker = parse_value(fields.next()?)?;
    let breaker = parse_value(fields.next()?)?;
    if fields.next().is_some() || words.is_empty() {
        return None;
    }
    Some((StateKey::from_words(words), MemoEntry { maker, breaker }))
}

fn read_cache(path: &Path) -> Result<HashMap<StateKey, MemoEntry>, CacheLoad> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(CacheLoad::Missing),
        Err(e) => return Err(CacheLoad::Ignored(e.to_string())),
    };
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(CacheLoad::Ignored("unrecognized header".into()));
    }
    let mut out = HashMap::new();
    for (i, line) in lines.enumerate() {
        let (key, entry) = parse_record(line)
            .ok_or_else(|| CacheLoad::Ignored(format!("damaged record {}", i + 2)))?;
        let slot: &mut MemoEntry = out.entry(key).or_default();
        slot.maker = slot.maker.or(entry.maker);
        slot.breaker = slot.breaker.or(entry.breaker);
    }
    Ok(out)
}

impl Solver {
    /// Merges a cache file into the memo. Entries already in memory win.
    pub fn load_cache(&mut self, path: &Path) -> CacheLoad {
        match read_cache(path) {
            Ok(records) => {
                let n = records.len();
                for (key, entry) in records {
                    let slot = self.memo_mut().entry(key).or_default();
                    slot.maker = slot.maker.or(entry.maker);
                    slot.breaker = slot.breaker.or(entry.breaker);
                }
                CacheLoad::Loaded(n)
            }
            Err(status) => status,
        }
    }

    /// Appends memo entries the file does not hold yet. A missing or
    /// unusable file is replaced by a fresh one. Returns records written.
    pub fn save_cache(&self, path: &Path) -> std::io::Result<usize> {
        let existing = read_cache(path);
        let (known, append): (HashMap<StateKey, MemoEntry>, bool) = match existing {
            Ok(k) => (k, true),
            Err(_) => (HashMap::new(), false),
        };
        let mut fresh: Vec<(&StateKey, &MemoEntry)> = self
            .memo()
            .iter()
            .filter(|(k, e)| {
                known.get(*k).is_none_or(|old| {
                    (e.maker.is_some() && old.maker.is_none())
                        || (e.breaker.is_some() && old.breaker.is_none())
                })
            })
            .collect();
        fresh.sort_by(|a, b| a.0.cmp(b.0));
        let mut file = if append {
            fs::OpenOptions::new().append(true).open(path)?
        } else {
            let mut f = fs::File::create(path)?;
            writeln!(f, "{CACHE_HEADER}")?;
            f
        };
        let mut seen = HashSet::new();
        for (key, entry) in &fresh {
            if seen.insert(*key) {
                writeln!(file, "{}", record_line(key, entry))?;
            }
        }
        Ok(fresh.len())
    }
}
