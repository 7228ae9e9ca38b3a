//! Barrier-synchronized worker pool for staged computations.
//!
//! The pool owns a piece of shared state. [`Pool::map`] runs one phase:
//! every worker reads the state, processes a strided share of the items,
//! and all of them meet at a barrier before results are returned in item
//! order. Between phases the driver may mutate the state through
//! [`Pool::state_mut`]; no worker touches it then. With one worker nothing
//! is spawned.

use std::sync::{Barrier, Mutex, RwLock, RwLockReadGuard, RwLockWriteGuard};

struct Shared<S, I, O> {
    state: RwLock<S>,
    items: RwLock<Vec<I>>,
    results: Mutex<Vec<Option<O>>>,
    stop: RwLock<bool>,
    start: Barrier,
    done: Barrier,
}

pub(crate) struct Pool<'a, S, I, O, F> {
    shared: &'a Shared<S, I, O>,
    work: &'a F,
    workers: usize,
}

impl<S, I, O, F> Pool<'_, S, I, O, F>
where
    F: Fn(&S, &I) -> O,
{
    pub(crate) fn map(&self, items: Vec<I>) -> Vec<O> {
        let len = items.len();
        *self.shared.results.lock().unwrap() = (0..len).map(|_| None).collect();
        *self.shared.items.write().unwrap() = items;
        if self.workers > 1 {
            self.shared.start.wait();
        }
        run_share(self.shared, self.work, 0, self.workers);
        if self.workers > 1 {
            self.shared.done.wait();
        }
        let results = std::mem::take(&mut *self.shared.results.lock().unwrap());
        results
            .into_iter()
            .map(|r| r.expect("every item is processed in its phase"))
            .collect()
    }

    pub(crate) fn state(&self) -> RwLockReadGuard<'_, S> {
        self.shared.state.read().unwrap()
    }

    pub(crate) fn state_mut(&self) -> RwLockWriteGuard<'_, S> {
        self.shared.state.write().unwrap()
    }
}

fn run_share<S, I, O, F>(shared: &Shared<S, I, O>, work: &F, worker: usize, workers: usize)
where
    F: Fn(&S, &I) -> O,
{
    let state = shared.state.read().unwrap();
    let items = shared.items.read().unwrap();
    for idx in (worker..items.len()).step_by(workers) {
        let out = work(&state, &items[idx]);
        shared.results.lock().unwrap()[idx] = Some(out);
    }
}

/// Runs `body` with a pool of `workers` threads (at least one) sharing
/// `state`, and hands the state back afterwards.
pub(crate) fn scoped<S, I, O, F, R>(
    workers: usize,
    state: S,
    work: F,
    body: impl FnOnce(&Pool<'_, S, I, O, F>) -> R,
) -> (S, R)
where
    S: Send + Sync,
    I: Send + Sync,
    O: Send,
    F: Fn(&S, &I) -> O + Sync,
{
    let workers = workers.max(1);
    let shared = Shared {
        state: RwLock::new(state),
        items: RwLock::new(Vec::new()),
        results: Mutex::new(Vec::new()),
        stop: RwLock::new(false),
        start: Barrier::new(workers),
        done: Barrier::new(workers),
    };
    let result = std::thread::scope(|scope| {
        for worker in 1..workers {
            let shared = &shared;
            let work = &work;
            scope.spawn(move || loop {
                shared.start.wait();
                if *shared.stop.read().unwrap() {
                    break;
                }
                run_share(shared, work, worker, workers);
                shared.done.wait();
            });
        }
        let pool = Pool {
            shared: &shared,
            work: &work,
            workers,
        };
        let result = body(&pool);
        if workers > 1 {
            *shared.stop.write().unwrap() = true;
            shared.start.wait();
        }
        result
    });
    (shared.state.into_inner().unwrap(), result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phases_see_mutations() {
        for workers in [1, 2, 8] {
            let (state, sums) = scoped(
                workers,
                10u64,
                |s: &u64, x: &u64| s * x,
                |pool| {
                    let first = pool.map((0..20).collect());
                    *pool.state_mut() += 1;
                    let second = pool.map((0..3).collect());
                    let empty = pool.map(Vec::new());
                    (first, second, empty)
                },
            );
            assert_eq!(state, 11);
            assert_eq!(sums.0, (0..20).map(|x| 10 * x).collect::<Vec<_>>());
            assert_eq!(sums.1, vec![0, 11, 22]);
            assert!(sums.2.is_empty());
        }
    }
}
