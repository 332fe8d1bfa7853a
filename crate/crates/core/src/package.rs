//! Extension package parsing: CRX3, plain ZIP and unpacked directories.

use std::collections::BTreeMap;
use std::io::{Cursor, Read, Write};
use std::path::Path;

use base64::Engine;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::manifest::{parse_manifest, Manifest, ManifestError, MANIFEST_PATH};

const CRX_MAGIC: &[u8; 4] = b"Cr24";
const ZIP_MAGIC: &[u8; 4] = b"PK\x03\x04";
const ZIP_EMPTY_MAGIC: &[u8; 4] = b"PK\x05\x06";

/// Format tag for serialized directory listings.
pub const DIR_LISTING_FORMAT: &str = "extscan-dir-v1";

#[derive(Debug, Error)]
pub enum PackageError {
    #[error("malformed archive: {reason}")]
    MalformedArchive { reason: String, crx_version: Option<u32> },
    #[error("package has no manifest.json")]
    MissingManifest,
    #[error("entry escapes the package root: {0}")]
    PathTraversal(String),
    #[error("entry {path} is {size} bytes, above the {limit}-byte limit")]
    EntryTooLarge { path: String, size: u64, limit: u64 },
    #[error("public key is empty")]
    EmptyKey,
    #[error(transparent)]
    Manifest(#[from] ManifestError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl PackageError {
    fn malformed(reason: impl Into<String>) -> Self {
        PackageError::MalformedArchive {
            reason: reason.into(),
            crx_version: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    Crx3,
    Zip,
    UnpackedDir,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PackageOptions {
    pub max_entry_bytes: u64,
}

impl Default for PackageOptions {
    fn default() -> Self {
        PackageOptions {
            max_entry_bytes: 32 * 1024 * 1024,
        }
    }
}

/// A parsed extension. Immutable after construction.
#[derive(Debug, Clone)]
pub struct ExtensionPackage {
    pub extension_id: Option<String>,
    pub version: String,
    pub files: BTreeMap<String, Vec<u8>>,
    pub manifest: Manifest,
    pub source_kind: SourceKind,
    /// Non-fatal parse notes (e.g. `KeyNotFound`).
    pub warnings: Vec<String>,
}

/// Chromium extension ID: the first 16 bytes of SHA-256 over the key, one
/// `a`..`p` letter per nibble.
pub fn derive_extension_id(public_key_der: &[u8]) -> Result<String, PackageError> {
    if public_key_der.is_empty() {
        return Err(PackageError::EmptyKey);
    }
    let digest = Sha256::digest(public_key_der);
    Ok(id_from_hash_prefix(&digest[..16]))
}

fn id_from_hash_prefix(prefix: &[u8]) -> String {
    prefix
        .iter()
        .flat_map(|b| [b >> 4, b & 0x0f])
        .map(|n| (b'a' + n) as char)
        .collect()
}

pub fn is_valid_extension_id(id: &str) -> bool {
    id.len() == 32 && id.bytes().all(|b| (b'a'..=b'p').contains(&b))
}

/// Parses a package from bytes. `hint` forces a container format;
/// without it the format is sniffed from the leading bytes.
pub fn parse_package(raw: &[u8], hint: Option<SourceKind>) -> Result<ExtensionPackage, PackageError> {
    parse_package_with(raw, hint, &PackageOptions::default())
}

pub fn parse_package_with(
    raw: &[u8],
    hint: Option<SourceKind>,
    opts: &PackageOptions,
) -> Result<ExtensionPackage, PackageError> {
    let kind = match hint {
        Some(k) => k,
        None if raw.starts_with(CRX_MAGIC) => SourceKind::Crx3,
        None if raw.starts_with(ZIP_MAGIC) || raw.starts_with(ZIP_EMPTY_MAGIC) => SourceKind::Zip,
        None if raw.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{') => SourceKind::UnpackedDir,
        None => return Err(PackageError::malformed("unrecognized container (not CRX, ZIP or directory listing)")),
    };
    match kind {
        SourceKind::Crx3 => {
            let crx = split_crx3(raw)?;
            let files = read_zip(crx.zip, opts)?;
            let mut warnings = Vec::new();
            let id = match crx.public_key {
                Some(key) => Some(derive_extension_id(key)?),
                None => {
                    warnings.push("KeyNotFound: no publisher key located in the CRX header".to_string());
                    None
                }
            };
            ExtensionPackage::from_files(files, SourceKind::Crx3, id, warnings)
        }
        SourceKind::Zip => {
            let files = read_zip(raw, opts)?;
            ExtensionPackage::from_files(files, SourceKind::Zip, None, Vec::new())
        }
        SourceKind::UnpackedDir => {
            let files = read_dir_listing(raw, opts)?;
            ExtensionPackage::from_files(files, SourceKind::UnpackedDir, None, Vec::new())
        }
    }
}

/// Reads an unpacked extension directory from disk.
pub fn read_unpacked_dir(root: &Path, opts: &PackageOptions) -> Result<ExtensionPackage, PackageError> {
    let mut files = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        let entries = std::fs::read_dir(&dir).map_err(|source| PackageError::Io {
            path: dir.display().to_string(),
            source,
        })?;
        for entry in entries {
            let entry = entry.map_err(|source| PackageError::Io {
                path: dir.display().to_string(),
                source,
            })?;
            let path = entry.path();
            let ft = entry.file_type().map_err(|source| PackageError::Io {
                path: path.display().to_string(),
                source,
            })?;
            if ft.is_dir() {
                stack.push(path);
            } else if ft.is_file() {
                let rel = path
                    .strip_prefix(root)
                    .expect("walked under root")
                    .components()
                    .map(|c| c.as_os_str().to_string_lossy().into_owned())
                    .collect::<Vec<_>>()
                    .join("/");
                let len = entry.metadata().map(|m| m.len()).unwrap_or(0);
                if len > opts.max_entry_bytes {
                    return Err(PackageError::EntryTooLarge {
                        path: rel,
                        size: len,
                        limit: opts.max_entry_bytes,
                    });
                }
                let bytes = std::fs::read(&path).map_err(|source| PackageError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                files.insert(normalize_entry_path(&rel)?, bytes);
            }
        }
    }
    ExtensionPackage::from_files(files, SourceKind::UnpackedDir, None, Vec::new())
}

impl ExtensionPackage {
    /// Builds a package from an in-memory file tree. `extension_id` wins
    /// over a `key` field in the manifest.
    pub fn from_files(
        files: BTreeMap<String, Vec<u8>>,
        source_kind: SourceKind,
        extension_id: Option<String>,
        mut warnings: Vec<String>,
    ) -> Result<ExtensionPackage, PackageError> {
        let manifest_bytes = files.get(MANIFEST_PATH).ok_or(PackageError::MissingManifest)?;
        let manifest = parse_manifest(manifest_bytes)?;
        let extension_id = match extension_id {
            Some(id) => Some(id),
            None => match manifest.key.as_deref() {
                Some(k) => match base64::engine::general_purpose::STANDARD.decode(k.trim()) {
                    Ok(der) if !der.is_empty() => Some(derive_extension_id(&der)?),
                    _ => {
                        warnings.push("manifest key is not valid base64; extension ID not derived".into());
                        None
                    }
                },
                None => None,
            },
        };
        Ok(ExtensionPackage {
            extension_id,
            version: manifest.version.clone(),
            files,
            manifest,
            source_kind,
            warnings,
        })
    }

    /// Overrides the extension ID (e.g. supplied by store metadata).
    pub fn with_extension_id(mut self, id: impl Into<String>) -> Self {
        self.extension_id = Some(id.into());
        self
    }

    pub fn file_text(&self, path: &str) -> Option<std::borrow::Cow<'_, str>> {
        self.files.get(path).map(|b| String::from_utf8_lossy(b))
    }

    /// Serializes the file tree as a stored (uncompressed) ZIP.
    pub fn to_zip_bytes(&self) -> Vec<u8> {
        write_zip(&self.files)
    }

    /// Serializes the file tree as a directory listing document.
    pub fn to_dir_listing(&self) -> Vec<u8> {
        let listing = DirListing {
            format: DIR_LISTING_FORMAT.to_string(),
            files: self
                .files
                .iter()
                .map(|(k, v)| (k.clone(), base64::engine::general_purpose::STANDARD.encode(v)))
                .collect(),
        };
        serde_json::to_vec_pretty(&listing).expect("listing serializes")
    }
}

/// Validates and normalizes an archive entry name.
fn normalize_entry_path(name: &str) -> Result<String, PackageError> {
    let unified = name.replace('\\', "/");
    let bytes = unified.as_bytes();
    if unified.starts_with('/') || (bytes.len() >= 2 && bytes[1] == b':' && bytes[0].is_ascii_alphabetic()) {
        return Err(PackageError::PathTraversal(name.to_string()));
    }
    let mut parts = Vec::new();
    for seg in unified.split('/') {
        match seg {
            "" | "." => continue,
            ".." => return Err(PackageError::PathTraversal(name.to_string())),
            s => parts.push(s),
        }
    }
    if parts.is_empty() {
        return Err(PackageError::malformed(format!("empty entry name {name:?}")));
    }
    Ok(parts.join("/"))
}

struct Crx3Parts<'a> {
    public_key: Option<&'a [u8]>,
    zip: &'a [u8],
}

fn split_crx3(raw: &[u8]) -> Result<Crx3Parts<'_>, PackageError> {
    if raw.len() < 12 {
        return Err(PackageError::malformed("CRX header truncated"));
    }
    if &raw[..4] != CRX_MAGIC {
        return Err(PackageError::malformed(format!(
            "bad CRX magic {:?}",
            String::from_utf8_lossy(&raw[..4])
        )));
    }
    let version = u32::from_le_bytes(raw[4..8].try_into().expect("4 bytes"));
    if version != 3 {
        return Err(PackageError::MalformedArchive {
            reason: format!("unsupported CRX version {version}"),
            crx_version: Some(version),
        });
    }
    let header_len = u32::from_le_bytes(raw[8..12].try_into().expect("4 bytes")) as usize;
    let zip_start = 12usize
        .checked_add(header_len)
        .filter(|&end| end <= raw.len())
        .ok_or_else(|| PackageError::malformed("CRX header length exceeds file size"))?;
    let header = &raw[12..zip_start];
    Ok(Crx3Parts {
        public_key: extract_header_key(header),
        zip: &raw[zip_start..],
    })
}

fn read_varint(buf: &[u8], pos: &mut usize) -> Option<u64> {
    let mut value = 0u64;
    for shift in (0..64).step_by(7) {
        let b = *buf.get(*pos)?;
        *pos += 1;
        value |= u64::from(b & 0x7f) << shift;
        if b & 0x80 == 0 {
            return Some(value);
        }
    }
    None
}

/// Length-delimited fields of a protobuf message as (field number, bytes).
/// Returns `None` if the buffer is not a well-formed message.
fn proto_bytes_fields(buf: &[u8]) -> Option<Vec<(u64, &[u8])>> {
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < buf.len() {
        let tag = read_varint(buf, &mut pos)?;
        let field = tag >> 3;
        match tag & 7 {
            0 => {
                read_varint(buf, &mut pos)?;
            }
            1 => pos = pos.checked_add(8).filter(|&p| p <= buf.len())?,
            2 => {
                let len = usize::try_from(read_varint(buf, &mut pos)?).ok()?;
                let end = pos.checked_add(len).filter(|&e| e <= buf.len())?;
                out.push((field, &buf[pos..end]));
                pos = end;
            }
            5 => pos = pos.checked_add(4).filter(|&p| p <= buf.len())?,
            _ => return None,
        }
    }
    Some(out)
}

// CrxFileHeader: 2/3 = AsymmetricKeyProof {1: public_key, 2: signature},
// 10000 = signed_header_data = SignedData {1: crx_id (16 bytes)}.
fn extract_header_key(header: &[u8]) -> Option<&[u8]> {
    let Some(fields) = proto_bytes_fields(header) else {
        return heuristic_key_scan(header);
    };
    let mut keys = Vec::new();
    let mut crx_id = None;
    for (num, body) in &fields {
        match num {
            2 | 3 => {
                if let Some(sub) = proto_bytes_fields(body) {
                    keys.extend(sub.iter().filter(|(n, k)| *n == 1 && !k.is_empty()).map(|(_, k)| *k));
                }
            }
            10000 => {
                crx_id = proto_bytes_fields(body)
                    .and_then(|sub| sub.into_iter().find(|(n, _)| *n == 1).map(|(_, v)| v));
            }
            _ => {}
        }
    }
    if let Some(id) = crx_id {
        if let Some(k) = keys.iter().find(|k| Sha256::digest(k)[..16] == *id) {
            return Some(k);
        }
    }
    keys.first().copied()
}

// Fallback for headers that do not walk as protobuf: first
// `0x0a <varint len> 0x30 ...` blob (field 1 holding a DER SEQUENCE).
fn heuristic_key_scan(header: &[u8]) -> Option<&[u8]> {
    (0..header.len()).find_map(|i| {
        if header[i] != 0x0a {
            return None;
        }
        let mut pos = i + 1;
        let len = usize::try_from(read_varint(header, &mut pos)?).ok()?;
        let end = pos.checked_add(len)?;
        (len >= 32 && end <= header.len() && header[pos] == 0x30).then(|| &header[pos..end])
    })
}

fn read_zip(raw: &[u8], opts: &PackageOptions) -> Result<BTreeMap<String, Vec<u8>>, PackageError> {
    let mut archive =
        zip::ZipArchive::new(Cursor::new(raw)).map_err(|e| PackageError::malformed(format!("corrupt ZIP: {e}")))?;
    let mut files = BTreeMap::new();
    for i in 0..archive.len() {
        let mut entry = archive
            .by_index(i)
            .map_err(|e| PackageError::malformed(format!("corrupt ZIP entry {i}: {e}")))?;
        if entry.is_dir() {
            continue;
        }
        let name = normalize_entry_path(entry.name())?;
        if entry.size() > opts.max_entry_bytes {
            return Err(PackageError::EntryTooLarge {
                path: name,
                size: entry.size(),
                limit: opts.max_entry_bytes,
            });
        }
        let mut buf = Vec::with_capacity(entry.size() as usize);
        (&mut entry)
            .take(opts.max_entry_bytes + 1)
            .read_to_end(&mut buf)
            .map_err(|e| PackageError::malformed(format!("corrupt ZIP entry {name}: {e}")))?;
        if buf.len() as u64 > opts.max_entry_bytes {
            return Err(PackageError::EntryTooLarge {
                path: name,
                size: buf.len() as u64,
                limit: opts.max_entry_bytes,
            });
        }
        files.entry(name).or_insert(buf);
    }
    Ok(files)
}

#[derive(Serialize, Deserialize)]
struct DirListing {
    format: String,
    files: BTreeMap<String, String>,
}

fn read_dir_listing(raw: &[u8], opts: &PackageOptions) -> Result<BTreeMap<String, Vec<u8>>, PackageError> {
    let listing: DirListing =
        serde_json::from_slice(raw).map_err(|e| PackageError::malformed(format!("bad directory listing: {e}")))?;
    if listing.format != DIR_LISTING_FORMAT {
        return Err(PackageError::malformed(format!("unknown listing format {:?}", listing.format)));
    }
    let mut files = BTreeMap::new();
    for (path, b64) in listing.files {
        let name = normalize_entry_path(&path)?;
        let bytes = base64::engine::general_purpose::STANDARD
            .decode(b64.as_bytes())
            .map_err(|e| PackageError::malformed(format!("bad base64 for {path}: {e}")))?;
        if bytes.len() as u64 > opts.max_entry_bytes {
            return Err(PackageError::EntryTooLarge {
                path: name,
                size: bytes.len() as u64,
                limit: opts.max_entry_bytes,
            });
        }
        files.insert(name, bytes);
    }
    Ok(files)
}

/// Writes a stored ZIP holding `files`.
pub fn write_zip(files: &BTreeMap<String, Vec<u8>>) -> Vec<u8> {
    let mut w = zip::ZipWriter::new(Cursor::new(Vec::new()));
    let opts = zip::write::SimpleFileOptions::default()
        .compression_method(zip::CompressionMethod::Stored)
        .last_modified_time(zip::DateTime::default());
    for (name, bytes) in files {
        w.start_file(name.as_str(), opts).expect("in-memory zip write");
        w.write_all(bytes).expect("in-memory zip write");
    }
    w.finish().expect("in-memory zip write").into_inner()
}

fn put_varint(out: &mut Vec<u8>, mut v: u64) {
    while v >= 0x80 {
        out.push((v as u8) | 0x80);
        v >>= 7;
    }
    out.push(v as u8);
}

fn put_bytes_field(out: &mut Vec<u8>, field: u64, bytes: &[u8]) {
    put_varint(out, field << 3 | 2);
    put_varint(out, bytes.len() as u64);
    out.extend_from_slice(bytes);
}

/// Wraps a ZIP payload in an (unsigned) CRX3 container carrying
/// `public_key_der`. Signatures are left empty; this tool never verifies them.
pub fn write_crx3(zip_payload: &[u8], public_key_der: &[u8]) -> Vec<u8> {
    let mut proof = Vec::new();
    put_bytes_field(&mut proof, 1, public_key_der);
    put_bytes_field(&mut proof, 2, &[]);
    let mut signed = Vec::new();
    put_bytes_field(&mut signed, 1, &Sha256::digest(public_key_der)[..16]);
    let mut header = Vec::new();
    put_bytes_field(&mut header, 2, &proof);
    put_bytes_field(&mut header, 10000, &signed);

    let mut out = Vec::with_capacity(12 + header.len() + zip_payload.len());
    out.extend_from_slice(CRX_MAGIC);
    out.extend_from_slice(&3u32.to_le_bytes());
    out.extend_from_slice(&(header.len() as u32).to_le_bytes());
    out.extend_from_slice(&header);
    out.extend_from_slice(zip_payload);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{"manifest_version":3,"name":"x","version":"1.0"}"#;

    fn one_file(name: &str, body: &[u8]) -> BTreeMap<String, Vec<u8>> {
        BTreeMap::from([(name.to_string(), body.to_vec())])
    }

    #[test]
    fn minimal_zip() {
        let zip = write_zip(&one_file("manifest.json", MINIMAL.as_bytes()));
        let pkg = parse_package(&zip, None).unwrap();
        assert_eq!(pkg.version, "1.0");
        assert_eq!(pkg.files.len(), 1);
        assert_eq!(pkg.extension_id, None);
        assert_eq!(pkg.source_kind, SourceKind::Zip);
    }

    #[test]
    fn bad_magic_is_malformed() {
        let zip = write_zip(&one_file("manifest.json", MINIMAL.as_bytes()));
        let mut crx = write_crx3(&zip, b"key");
        crx[..4].copy_from_slice(b"XrC4");
        assert!(matches!(
            parse_package(&crx, Some(SourceKind::Crx3)),
            Err(PackageError::MalformedArchive { .. })
        ));
        assert!(matches!(parse_package(&crx, None), Err(PackageError::MalformedArchive { .. })));
    }

    #[test]
    fn crx2_rejected_with_version() {
        let mut crx = write_crx3(&write_zip(&one_file("manifest.json", MINIMAL.as_bytes())), b"k");
        crx[4..8].copy_from_slice(&2u32.to_le_bytes());
        match parse_package(&crx, None) {
            Err(PackageError::MalformedArchive { crx_version, .. }) => assert_eq!(crx_version, Some(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn truncated_header() {
        let crx = write_crx3(&write_zip(&one_file("manifest.json", MINIMAL.as_bytes())), b"k");
        assert!(matches!(parse_package(&crx[..10], None), Err(PackageError::MalformedArchive { .. })));
        let mut bad_len = crx.clone();
        bad_len[8..12].copy_from_slice(&u32::MAX.to_le_bytes());
        assert!(matches!(parse_package(&bad_len, None), Err(PackageError::MalformedArchive { .. })));
    }

    #[test]
    fn corrupt_zip() {
        let mut zip = write_zip(&one_file("manifest.json", MINIMAL.as_bytes()));
        let n = zip.len();
        zip.truncate(n - 10);
        assert!(matches!(parse_package(&zip, None), Err(PackageError::MalformedArchive { .. })));
    }

    #[test]
    fn missing_manifest() {
        let zip = write_zip(&one_file("background.js", b"1"));
        assert!(matches!(parse_package(&zip, None), Err(PackageError::MissingManifest)));
    }

    #[test]
    fn traversal_rejected() {
        let mut files = one_file("manifest.json", MINIMAL.as_bytes());
        files.insert("../evil.js".into(), b"x".to_vec());
        let zip = write_zip(&files);
        assert!(matches!(parse_package(&zip, None), Err(PackageError::PathTraversal(_))));
        assert!(matches!(normalize_entry_path("/etc/passwd"), Err(PackageError::PathTraversal(_))));
        assert!(matches!(normalize_entry_path("a\\..\\b"), Err(PackageError::PathTraversal(_))));
        assert_eq!(normalize_entry_path("./js\\a.js").unwrap(), "js/a.js");
    }

    #[test]
    fn entry_size_cap() {
        let mut files = one_file("manifest.json", MINIMAL.as_bytes());
        files.insert("big.bin".into(), vec![0u8; 2048]);
        let zip = write_zip(&files);
        let opts = PackageOptions { max_entry_bytes: 1024 };
        assert!(matches!(
            parse_package_with(&zip, None, &opts),
            Err(PackageError::EntryTooLarge { .. })
        ));
    }

    #[test]
    fn crx_key_yields_id() {
        let key = b"not really DER but any bytes will do";
        let crx = write_crx3(&write_zip(&one_file("manifest.json", MINIMAL.as_bytes())), key);
        let pkg = parse_package(&crx, None).unwrap();
        assert_eq!(pkg.source_kind, SourceKind::Crx3);
        assert_eq!(pkg.extension_id.unwrap(), derive_extension_id(key).unwrap());
        assert!(pkg.warnings.is_empty());
    }

    #[test]
    fn crx_without_key_warns() {
        let zip = write_zip(&one_file("manifest.json", MINIMAL.as_bytes()));
        let mut crx = Vec::new();
        crx.extend_from_slice(CRX_MAGIC);
        crx.extend_from_slice(&3u32.to_le_bytes());
        crx.extend_from_slice(&0u32.to_le_bytes());
        crx.extend_from_slice(&zip);
        let pkg = parse_package(&crx, None).unwrap();
        assert!(pkg.extension_id.is_none());
        assert!(pkg.warnings[0].starts_with("KeyNotFound"));
    }

    #[test]
    fn header_key_matching_crx_id_is_preferred() {
        let mut first = Vec::new();
        put_bytes_field(&mut first, 1, b"decoy-key");
        let mut second = Vec::new();
        put_bytes_field(&mut second, 1, b"real-key");
        let mut signed = Vec::new();
        put_bytes_field(&mut signed, 1, &Sha256::digest(b"real-key")[..16]);
        let mut header = Vec::new();
        put_bytes_field(&mut header, 2, &first);
        put_bytes_field(&mut header, 3, &second);
        put_bytes_field(&mut header, 10000, &signed);
        assert_eq!(extract_header_key(&header), Some(&b"real-key"[..]));
    }

    #[test]
    fn manifest_key_yields_id_for_zip() {
        let der = b"some public key bytes";
        let b64 = base64::engine::general_purpose::STANDARD.encode(der);
        let manifest = format!(r#"{{"manifest_version":3,"name":"x","version":"1","key":"{b64}"}}"#);
        let pkg = parse_package(&write_zip(&one_file("manifest.json", manifest.as_bytes())), None).unwrap();
        assert_eq!(pkg.extension_id.unwrap(), derive_extension_id(der).unwrap());
    }

    #[test]
    fn id_derivation_basics() {
        let a = derive_extension_id(b"test").unwrap();
        assert_eq!(a, derive_extension_id(b"test").unwrap());
        assert!(is_valid_extension_id(&a));
        assert_ne!(derive_extension_id(b"key-0001").unwrap(), derive_extension_id(b"key-0002").unwrap());
        assert!(matches!(derive_extension_id(b""), Err(PackageError::EmptyKey)));
    }

    #[test]
    fn dir_listing_round_trip() {
        let mut files = one_file("manifest.json", MINIMAL.as_bytes());
        files.insert("img/icon.png".into(), vec![0x89, b'P', b'N', b'G', 0, 1, 2]);
        let pkg = ExtensionPackage::from_files(files.clone(), SourceKind::Zip, None, vec![]).unwrap();
        let again = parse_package(&pkg.to_dir_listing(), None).unwrap();
        assert_eq!(again.files, files);
        assert_eq!(again.source_kind, SourceKind::UnpackedDir);
    }

    #[test]
    fn unpacked_dir_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::create_dir_all(dir.path().join("js")).unwrap();
        std::fs::write(dir.path().join("manifest.json"), MINIMAL).unwrap();
        std::fs::write(dir.path().join("js/bg.js"), "1").unwrap();
        let pkg = read_unpacked_dir(dir.path(), &PackageOptions::default()).unwrap();
        assert_eq!(pkg.files.keys().collect::<Vec<_>>(), vec!["js/bg.js", "manifest.json"]);
    }
}
