//! Read-mostly memo table.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, RwLock};

/// Append-only cache. Lookups take a shared lock; misses are built one at a
/// time under a separate mutex, so a value is constructed at most once.
#[derive(Debug)]
pub struct Memo<K, V> {
    table: RwLock<HashMap<K, Arc<V>>>,
    build: Mutex<()>,
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { table: RwLock::new(HashMap::new()), build: Mutex::new(()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.table.read().expect("memo lock poisoned").get(key).cloned()
    }

    pub fn get_or_try_insert<E>(&self, key: &K, make: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let _guard = self.build.lock().expect("memo build lock poisoned");
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = Arc::new(make()?);
        self.table.write().expect("memo lock poisoned").insert(key.clone(), Arc::clone(&v));
        Ok(v)
    }

    pub fn get_or_insert(&self, key: &K, make: impl FnOnce() -> V) -> Arc<V> {
        self.get_or_try_insert::<std::convert::Infallible>(key, || Ok(make())).unwrap_or_else(|e| match e {})
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn builds_each_key_once_across_threads() {
        let memo: Memo<u32, u64> = Memo::new();
        let calls = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..8 {
                s.spawn(|| {
                    for k in 0..20u32 {
                        let v = memo.get_or_insert(&k, || {
                            calls.fetch_add(1, Ordering::SeqCst);
                            u64::from(k) * 2
                        });
                        assert_eq!(*v, u64::from(k) * 2);
                    }
                });
            }
        });
        assert_eq!(calls.load(Ordering::SeqCst), 20);
        assert_eq!(memo.len(), 20);
    }

    #[test]
    fn failed_builds_are_not_cached() {
        let memo: Memo<u8, u8> = Memo::new();
        assert!(memo.get_or_try_insert(&1, || Err("nope")).is_err());
        assert!(memo.is_empty());
        assert_eq!(*memo.get_or_try_insert::<()>(&1, || Ok(7)).unwrap(), 7);
    }
}
