//! File parsing and dataset-directory loaders.
//!
//! Triple files are UTF-8, one triple per line, tab-separated, no header.
//! A line-oriented Turtle subset (`<s> <p> <o> .`) is also accepted.
//! Multi-source directories follow the OpenEA/DBP15K layout
//! (`rel_triples_1`, `rel_triples_2`, `ent_links`, optional `attr_triples_*`
//! and split folders); single-KG directories use `train.txt`/`valid.txt`/
//! `test.txt` plus optional `type_{train,valid,test}.txt`.

use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::dataset::{RawDataset, RawKg, RawLinks, RawTypes};
use super::RawTriple;
use crate::{Error, Result};

/// Reserved relation string for type assertions.
pub const RDF_TYPE: &str = "rdf:type";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TripleFormat {
    #[default]
    Tsv,
    TtlSubset,
}

impl TripleFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("ttl") => TripleFormat::TtlSubset,
            _ => TripleFormat::Tsv,
        }
    }
}

fn parse_tsv_line(line: &str) -> Option<RawTriple> {
    let mut it = line.split('\t');
    let h = it.next()?.trim();
    let r = it.next()?.trim();
    let t = it.next()?.trim();
    if it.next().is_some() || h.is_empty() || r.is_empty() || t.is_empty() {
        return None;
    }
    Some(RawTriple::new(h, r, t))
}

fn parse_ttl_line(line: &str) -> Option<RawTriple> {
    let body = line.trim().strip_suffix('.')?.trim_end();
    let mut fields = Vec::with_capacity(3);
    for tok in body.split_whitespace() {
        let iri = tok.strip_prefix('<')?.strip_suffix('>')?;
        if iri.is_empty() {
            return None;
        }
        fields.push(iri);
    }
    if fields.len() != 3 {
        return None;
    }
    Some(RawTriple::new(fields[0], fields[1], fields[2]))
}

/// Reads triples from `path`, preserving order and duplicates. Empty and
/// whitespace-only lines are skipped; anything else must parse or the load
/// fails with the offending line number.
pub fn load_triples(path: &Path, format: TripleFormat) -> Result<Vec<RawTriple>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Dataset(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let parsed = match format {
            TripleFormat::Tsv => parse_tsv_line(line),
            TripleFormat::TtlSubset => parse_ttl_line(line),
        };
        match parsed {
            Some(t) => out.push(t),
            None => {
                return Err(Error::parse(
                    path.display().to_string(),
                    i + 1,
                    "expected 3 non-empty fields",
                ))
            }
        }
    }
    Ok(out)
}

/// Reads `entity1<TAB>entity2` pairs.
pub fn load_alignment_pairs(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Dataset(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split('\t');
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) if !a.trim().is_empty() && !b.trim().is_empty() => {
                out.push((a.trim().to_owned(), b.trim().to_owned()));
            }
            _ => {
                return Err(Error::parse(
                    path.display().to_string(),
                    i + 1,
                    "expected 2 tab-separated fields",
                ))
            }
        }
    }
    Ok(out)
}

/// Deterministic ratio split: shuffle with the seed, then take
/// `floor(r_train * n)` for train and `floor(r_test * n)` for test; the
/// remainder is validation.
pub fn split_ratio<T: Clone>(
    items: &[T],
    r_train: f64,
    r_test: f64,
    seed: u64,
) -> (Vec<T>, Vec<T>, Vec<T>) {
    let mut order: Vec<usize> = (0..items.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let n = items.len();
    let n_train = (r_train * n as f64).floor() as usize;
    let n_test = (r_test * n as f64).floor() as usize;
    let n_train = n_train.min(n);
    let n_test = n_test.min(n - n_train);
    let pick = |idx: &[usize]| idx.iter().map(|&i| items[i].clone()).collect::<Vec<_>>();
    let train = pick(&order[..n_train]);
    let test = pick(&order[n_train..n_train + n_test]);
    let valid = pick(&order[n_train + n_test..]);
    (train, valid, test)
}

/// Knobs for the directory loaders.
#[derive(Debug, Clone)]
pub struct LoadOptions {
    pub format: TripleFormat,
    /// Alignment-link split ratios `(train, valid, test)`; used when the
    /// directory ships only a flat `ent_links` file.
    pub link_split: (f64, f64, f64),
    /// When set, all alignment links become train seeds (multi-source LP).
    pub all_links_train: bool,
    /// Per-KG relational split ratios, used when no split files exist.
    pub lp_split: (f64, f64, f64),
    pub seed: u64,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            format: TripleFormat::Tsv,
            link_split: (0.3, 0.0, 0.7),
            all_links_train: false,
            lp_split: (0.9, 0.05, 0.05),
            seed: 1,
        }
    }
}

fn load_if_exists(path: &Path, format: TripleFormat) -> Result<Vec<RawTriple>> {
    if path.is_file() {
        load_triples(path, format)
    } else {
        Ok(Vec::new())
    }
}

fn require_dir(dir: &Path) -> Result<()> {
    if !dir.is_dir() {
        return Err(Error::Dataset(format!("dataset directory not found: {}", dir.display())));
    }
    Ok(())
}

fn load_type_file(path: &Path) -> Result<Vec<RawTriple>> {
    let triples = load_if_exists(path, TripleFormat::Tsv)?;
    for t in &triples {
        if t.relation != RDF_TYPE {
            return Err(Error::Dataset(format!(
                "{}: type assertions must use the reserved relation {RDF_TYPE}, got {}",
                path.display(),
                t.relation
            )));
        }
    }
    Ok(triples)
}

/// Loads a single-KG dataset directory (`train.txt`, `valid.txt`, `test.txt`,
/// optional `type_{train,valid,test}.txt`).
pub fn load_single_kg_dir(dir: &Path, opts: &LoadOptions) -> Result<RawDataset> {
    require_dir(dir)?;
    let train_path = dir.join("train.txt");
    if !train_path.is_file() {
        return Err(Error::Dataset(format!("missing train file: {}", train_path.display())));
    }
    let kg = RawKg {
        name: "kg".into(),
        train: load_triples(&train_path, opts.format)?,
        valid: load_if_exists(&dir.join("valid.txt"), opts.format)?,
        test: load_if_exists(&dir.join("test.txt"), opts.format)?,
        attributes: Vec::new(),
    };
    let types = {
        let train = load_type_file(&dir.join("type_train.txt"))?;
        let valid = load_type_file(&dir.join("type_valid.txt"))?;
        let test = load_type_file(&dir.join("type_test.txt"))?;
        if train.is_empty() && valid.is_empty() && test.is_empty() {
            None
        } else {
            Some(RawTypes { train, valid, test })
        }
    };
    Ok(RawDataset { kgs: vec![kg], links: None, types })
}

fn find_link_splits(dir: &Path) -> Option<[std::path::PathBuf; 3]> {
    let candidates = [
        [
            dir.join("721_5fold/1/train_links"),
            dir.join("721_5fold/1/valid_links"),
            dir.join("721_5fold/1/test_links"),
        ],
        [dir.join("links/train"), dir.join("links/valid"), dir.join("links/test")],
    ];
    candidates.into_iter().find(|c| c.iter().all(|p| p.is_file()))
}

/// Loads a two-KG dataset directory in the OpenEA/DBP15K layout.
pub fn load_multi_kg_dir(dir: &Path, opts: &LoadOptions) -> Result<RawDataset> {
    require_dir(dir)?;
    let mut kgs = Vec::new();
    for i in 1..=2 {
        let rel_path = dir.join(format!("rel_triples_{i}"));
        if !rel_path.is_file() {
            return Err(Error::Dataset(format!("missing triple file: {}", rel_path.display())));
        }
        let all = load_triples(&rel_path, opts.format)?;
        let split_dir = dir.join(format!("splits_{i}"));
        let (train, valid, test) = if split_dir.is_dir() {
            (
                load_triples(&split_dir.join("train.txt"), opts.format)?,
                load_if_exists(&split_dir.join("valid.txt"), opts.format)?,
                load_if_exists(&split_dir.join("test.txt"), opts.format)?,
            )
        } else {
            split_ratio(&all, opts.lp_split.0, opts.lp_split.2, opts.seed.wrapping_add(i as u64))
        };
        kgs.push(RawKg {
            name: format!("kg{i}"),
            train,
            valid,
            test,
            attributes: load_if_exists(&dir.join(format!("attr_triples_{i}")), opts.format)?,
        });
    }

    let links_path = dir.join("ent_links");
    let links = if let Some([tr, va, te]) = find_link_splits(dir) {
        if opts.all_links_train {
            let mut all = load_alignment_pairs(&tr)?;
            all.extend(load_alignment_pairs(&va)?);
            all.extend(load_alignment_pairs(&te)?);
            Some(RawLinks { train: all, valid: Vec::new(), test: Vec::new() })
        } else {
            Some(RawLinks {
                train: load_alignment_pairs(&tr)?,
                valid: load_alignment_pairs(&va)?,
                test: load_alignment_pairs(&te)?,
            })
        }
    } else if links_path.is_file() {
        let all = load_alignment_pairs(&links_path)?;
        if opts.all_links_train {
            Some(RawLinks { train: all, valid: Vec::new(), test: Vec::new() })
        } else {
            let (train, valid, test) =
                split_ratio(&all, opts.link_split.0, opts.link_split.2, opts.seed);
            Some(RawLinks { train, valid, test })
        }
    } else {
        None
    };

    Ok(RawDataset { kgs, links, types: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write(dir: &Path, name: &str, content: &str) {
        let path = dir.join(name);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).unwrap();
        }
        let mut f = fs::File::create(path).unwrap();
        f.write_all(content.as_bytes()).unwrap();
    }

    #[test]
    fn tsv_line_splits_into_fields() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "t.txt", "A\tlikes\tB\n");
        let got = load_triples(&dir.path().join("t.txt"), TripleFormat::Tsv).unwrap();
        assert_eq!(got, vec![RawTriple::new("A", "likes", "B")]);
    }

    #[test]
    fn empty_file_is_empty_sequence() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "t.txt", "");
        let got = load_triples(&dir.path().join("t.txt"), TripleFormat::Tsv).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "t.txt", "A\tlikes\tB\nonly two\tfields\n");
        let err = load_triples(&dir.path().join("t.txt"), TripleFormat::Tsv).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(":2:"), "{msg}");
    }

    #[test]
    fn duplicates_and_order_preserved() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "t.txt", "a\tr\tb\na\tr\tb\nb\tr\tc\n");
        let got = load_triples(&dir.path().join("t.txt"), TripleFormat::Tsv).unwrap();
        assert_eq!(got.len(), 3);
        assert_eq!(got[0], got[1]);
    }

    #[test]
    fn ttl_subset_parses_iris() {
        let dir = tempfile::tempdir().unwrap();
        write(
            dir.path(),
            "t.ttl",
            "<http://a> <http://p> <http://b> .\n<http://b> <http://p> <http://c> .\n",
        );
        let got = load_triples(&dir.path().join("t.ttl"), TripleFormat::TtlSubset).unwrap();
        assert_eq!(got[0], RawTriple::new("http://a", "http://p", "http://b"));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn ttl_missing_dot_is_error() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "t.ttl", "<a> <p> <b>\n");
        assert!(load_triples(&dir.path().join("t.ttl"), TripleFormat::TtlSubset).is_err());
    }

    #[test]
    fn ratio_split_counts_use_floor_train_floor_test_rest_valid() {
        let items: Vec<u32> = (0..70414).collect();
        let (tr, va, te) = split_ratio(&items, 0.9, 0.05, 7);
        assert_eq!((tr.len(), va.len(), te.len()), (63372, 3522, 3520));
        let items: Vec<u32> = (0..95142).collect();
        let (tr, va, te) = split_ratio(&items, 0.9, 0.05, 7);
        assert_eq!((tr.len(), va.len(), te.len()), (85627, 4758, 4757));
    }

    #[test]
    fn ratio_split_is_deterministic_partition() {
        let items: Vec<u32> = (0..100).collect();
        let a = split_ratio(&items, 0.7, 0.2, 42);
        let b = split_ratio(&items, 0.7, 0.2, 42);
        assert_eq!(a, b);
        let mut all: Vec<u32> = a.0.iter().chain(&a.1).chain(&a.2).copied().collect();
        all.sort_unstable();
        assert_eq!(all, items);
    }

    #[test]
    fn missing_dataset_dir_names_path() {
        let err = load_single_kg_dir(Path::new("/nonexistent/ds"), &LoadOptions::default())
            .unwrap_err();
        assert!(err.to_string().contains("/nonexistent/ds"));
    }
}
