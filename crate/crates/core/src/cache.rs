//! Persistent verdict cache keyed by canonical graph6.
//!
//! The file is append-only with one `<canonical-graph6> <verdict-byte>`
//! record per line ('1' for strongly perfect, '0' for not). A corrupt tail
//! (for example from a killed process) is truncated on load; everything
//! before it is kept.

use crate::canon::CanonicalKey;
use crate::graph6::parse_graph6;
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::Path;
use std::sync::Mutex;

pub struct CertCache {
    map: Mutex<HashMap<CanonicalKey, bool>>,
    file: Option<Mutex<File>>,
}

impl CertCache {
    /// Purely in-memory cache.
    pub fn in_memory() -> CertCache {
        CertCache {
            map: Mutex::new(HashMap::new()),
            file: None,
        }
    }

    /// Opens or creates a cache file, loading every well-formed record and
    /// truncating the file after the last good one.
    pub fn open(path: &Path) -> std::io::Result<CertCache> {
        let mut file = OpenOptions::new()
            .read(true)
            .write(true)
            .create(true)
            .truncate(false)
            .open(path)?;
        let mut text = String::new();
        let mut raw = Vec::new();
        file.read_to_end(&mut raw)?;
        let mut good_end = 0usize;
        let mut map = HashMap::new();
        if let Ok(s) = String::from_utf8(raw.clone()) {
            text = s;
        } else {
            // scan only the valid utf8 prefix
            let valid = raw
                .iter()
                .position(|&b| b >= 0x80)
                .unwrap_or(raw.len());
            text.push_str(std::str::from_utf8(&raw[..valid]).unwrap_or(""));
        }
        let mut offset = 0usize;
        for line in text.split_inclusive('\n') {
            let complete = line.ends_with('\n');
            let body = line.trim_end_matches('\n');
            if !complete {
                break;
            }
            match parse_record(body) {
                Some((key, verdict)) => {
                    map.insert(key, verdict);
                    offset += line.len();
                }
                None => break,
            }
        }
        good_end += offset;
        if good_end < raw.len() {
            file.set_len(good_end as u64)?;
        }
        file.seek(SeekFrom::End(0))?;
        Ok(CertCache {
            map: Mutex::new(map),
            file: Some(Mutex::new(file)),
        })
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<bool> {
        self.map.lock().unwrap().get(key).copied()
    }

    pub fn put(&self, key: CanonicalKey, verdict: bool) {
        let fresh = self
            .map
            .lock()
            .unwrap()
            .insert(key.clone(), verdict)
            .is_none();
        if !fresh {
            return;
        }
        if let (Some(file), Some(g6)) = (&self.file, key.as_graph6()) {
            let mut f = file.lock().unwrap();
            let _ = writeln!(f, "{g6} {}", if verdict { '1' } else { '0' });
            let _ = f.flush();
        }
    }
}

fn parse_record(line: &str) -> Option<(CanonicalKey, bool)> {
    let (g6, verdict) = line.rsplit_once(' ')?;
    let verdict = match verdict {
        "1" => true,
        "0" => false,
        _ => return None,
    };
    let graph = parse_graph6(g6).ok()?;
    let key = crate::canon::canonical_key(&graph);
    // a record must store the canonical labeling, not just any iso copy
    if key.as_graph6() != Some(g6) {
        return None;
    }
    Some((key, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::graph::Graph;

    #[test]
    fn round_trips_through_a_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("verdicts.cache");
        let key = canonical_key(&Graph::cycle(5));
        {
            let cache = CertCache::open(&path).unwrap();
            cache.put(key.clone(), false);
            cache.put(canonical_key(&Graph::cycle(6)), true);
        }
        let cache = CertCache::open(&path).unwrap();
        assert_eq!(cache.get(&key), Some(false));
        assert_eq!(cache.get(&canonical_key(&Graph::cycle(6))), Some(true));
        assert_eq!(cache.len(), 2);
    }

    #[test]
    fn corrupt_tail_is_truncated() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("verdicts.cache");
        {
            let cache = CertCache::open(&path).unwrap();
            cache.put(canonical_key(&Graph::cycle(6)), true);
        }
        let mut raw = std::fs::read(&path).unwrap();
        let good = raw.len();
        raw.extend_from_slice(b"garbage without newline");
        std::fs::write(&path, &raw).unwrap();
        let cache = CertCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(std::fs::metadata(&path).unwrap().len(), good as u64);
        // and appending still works afterwards
        cache.put(canonical_key(&Graph::cycle(4)), true);
        let cache = CertCache::open(&path).unwrap();
        assert_eq!(cache.len(), 2);
    }

    #[test]
    fn in_memory_cache_works() {
        let cache = CertCache::in_memory();
        assert!(cache.is_empty());
        cache.put(canonical_key(&Graph::cycle(4)), true);
        assert_eq!(cache.get(&canonical_key(&Graph::cycle(4))), Some(true));
    }
}
