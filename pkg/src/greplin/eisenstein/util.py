# Copyright 2026 The eisenstein Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Thread helpers shared by the enumeration and scan code."""

from six.moves.queue import Queue

import logging
import threading

log = logging.getLogger(__name__)



class Counter(object):
  """A tally of events that may be recorded from several worker threads."""

  def __init__(self):
    self._lock = threading.Lock()
    self._count = 0


  @property
  def value(self):
    """The current tally."""
    with self._lock:
      return self._count


  def increment(self, amount=1):
    """Records amount more events and returns the new tally."""
    with self._lock:
      self._count += amount
      return self._count


  def reset(self):
    """Starts a new tally, returning the events recorded since the last reset."""
    with self._lock:
      count, self._count = self._count, 0
      return count



class WorkerPool(object):
  """A fixed set of daemon threads draining a shared job queue.

  Results of map() come back in input order, so callers that merge them get the same
  output for every pool size.
  """

  def __init__(self, threads):
    assert threads >= 1
    self.jobs = Queue()
    self.workers = []
    for index in range(threads):
      worker = threading.Thread(target=self._run, name='eisenstein-worker-%d' % index)
      worker.daemon = True
      worker.start()
      self.workers.append(worker)
    log.debug('Started %d workers', threads)


  def _run(self):
    """Worker loop; a None job stops the thread."""
    while True:
      job = self.jobs.get()
      try:
        if job is None:
          break
        job()
      finally:
        self.jobs.task_done()


  def map(self, function, items):
    """Applies function to every item on the pool and returns the results in order."""
    items = list(items)
    results = [None] * len(items)
    failures = []

    def makeJob(index, item):
      """Binds one work item."""
      def job():
        """Runs one work item, capturing its failure."""
        try:
          results[index] = function(item)
        except Exception as e: # pylint: disable=W0703
          failures.append((index, e))
      return job

    for index, item in enumerate(items):
      self.jobs.put(makeJob(index, item))
    self.jobs.join()

    if failures:
      failures.sort(key=lambda failure: failure[0])
      raise failures[0][1]
    return results


  def shutdown(self):
    """Stops every worker thread."""
    for _ in self.workers:
      self.jobs.put(None)
    for worker in self.workers:
      worker.join()
    log.debug('Stopped %d workers', len(self.workers))
    self.workers = []


  def __enter__(self):
    return self


  def __exit__(self, *_):
    self.shutdown()



def parallelMap(function, items, threads=1):
  """Maps function over items, on a worker pool when more than one thread is requested."""
  items = list(items)
  if threads <= 1 or len(items) <= 1:
    return [function(item) for item in items]
  with WorkerPool(min(threads, len(items))) as pool:
    return pool.map(function, items)
