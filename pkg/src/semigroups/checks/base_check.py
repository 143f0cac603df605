from abc import ABC, abstractmethod

import pandas as pd
import numpy as np
from datetime import datetime
from concurrent.futures import ThreadPoolExecutor
import os
import sys
import logging
import time

from tqdm import tqdm

from ..config import Caps
from ..core.semigroup import FiniteSemigroup
from ..errors import CapExceeded, SemigroupError, TheoremViolation, WellDefinednessViolation, FactorizationNotFound
from ..report import dumps, dumps_line

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
CAP = "cap"
BUG = "bug"

# errors that mean the implementation is wrong, not the input
_BUGS = (TheoremViolation, WellDefinednessViolation, FactorizationNotFound)


class BaseCheck(ABC):
    """
    An abstract class with the machinery to run one check over many
    semigroups: setup, serial and threaded runs, JSON/NDJSON dumps and a
    DataFrame summary. Subclasses define `__setup__` and `check_one`.
    Args:
        keyword (str): Name of the check, used in file names and logs.
        semigroups (list[FiniteSemigroup]): The inputs, in report order.
        out_path (str): Directory for JSON dumps.
        silent (bool): Hide the progress bar.
        save_json (bool): Dump results after `.run()`.
        caps (Caps): Resource caps handed to every check.
        options (dict): Extra settings; `max_failures` stops a run early.
    Raises:
        TypeError: If keyword is not a str or an input is not a FiniteSemigroup.
    Example:
        check = AxiomsCheck(keyword="axioms", semigroups=list(enumerate_corpus(3)))
        check.run(max_workers=4)
    """
    def __init__(
            self,
            keyword,
            semigroups: list,
            out_path=None,
            silent: bool = True,
            save_json: bool = False,
            caps: Caps = None,
            options=None,
        ):
        if not isinstance(keyword, str):
            raise TypeError("keyword must be a str naming the check")
        semigroups = list(semigroups)
        if not all(isinstance(S, FiniteSemigroup) for S in semigroups):
            raise TypeError("semigroups must be FiniteSemigroup instances")

        self.keyword = keyword
        self.semigroups = semigroups
        self.out_path = out_path if out_path is not None else os.getcwd()
        self.silent = silent
        self.save_json = save_json
        self.caps = caps if caps is not None else Caps()
        self.results = []

        options = dict(options) if options is not None else {}
        self.max_failures = options.pop("max_failures", None)
        self.options = options

    @abstractmethod
    def __setup__(self):
        """
        Anything to prepare before the first semigroup is checked, returned as
        a check_tools dict handed to every `check_one` call. Can be empty.
        """
        check_tools = {}
        return check_tools

    @abstractmethod
    def check_one(self, S: FiniteSemigroup, check_tools: dict) -> dict:
        """
        Checks one semigroup. The returned dict must carry "passed" (bool) or
        "skipped" (str) and nothing time dependent.
        """
        pass

    def _record(self, i: int, S: FiniteSemigroup, check_tools: dict) -> dict:
        record = {"index": i, "name": S.name, "order": S.order, "hash": S.content_hash(), "check": self.keyword}
        start = time.perf_counter()
        try:
            result = self.check_one(S, check_tools)
            if "skipped" in result:
                record["status"] = SKIP
            else:
                record["status"] = PASS if result["passed"] else FAIL
            record["result"] = result
        except CapExceeded as e:
            logger.warning(f"{self.keyword}: {S.name} skipped, {e}")
            record["status"] = CAP
            record["result"] = e.to_dict()
        except _BUGS as e:
            logger.error(f"{self.keyword}: {S.name} violates a theorem: {e} (witness {e.witness})")
            record["status"] = BUG
            record["result"] = e.to_dict()
        except SemigroupError as e:
            logger.warning(f"{self.keyword}: {S.name} failed: {e}")
            record["status"] = FAIL
            record["result"] = e.to_dict()
        record["timing"] = {"ms": round((time.perf_counter() - start) * 1000.0, 3)}
        return record

    def check_many(self, indices) -> dict:
        """
        Checks the semigroups at `indices`.
        Returns:
            dict: index -> record, so that threaded runs can be merged in order.
        Notes:
            - `.__setup__()` runs once per call, so each worker gets its own tools.
            - The run stops once `max_failures` fail or bug records have been seen.
        """
        check_tools = self.__setup__()
        records = {}
        failures = 0
        for i in tqdm(list(indices), desc=self.keyword, disable=self.silent, file=sys.stderr):
            i = int(i)
            record = self._record(i, self.semigroups[i], check_tools)
            records[i] = record
            logger.debug(f"{self.keyword}: {record['name']} {record['status']}")
            if record["status"] in (FAIL, BUG):
                failures += 1
                if self.max_failures is not None and failures >= self.max_failures:
                    logger.error(f"{self.keyword}: reached maximum failures")
                    logger.error("===== Full Stop =====")
                    break
        return records

    def check_many_parallel(self, max_workers: int) -> dict:
        """
        Runs `.check_many()` over `max_workers` slices of the inputs in threads
        and flattens the per-worker dicts.
        """
        input_ids = [chunk for chunk in np.array_split(np.arange(len(self.semigroups)), max_workers) if len(chunk)]
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results_workers = list(executor.map(self.check_many, input_ids, timeout=None))
        return {k: v for results_worker in results_workers for k, v in results_worker.items()}

    def run(self, max_workers: int = 1) -> list:
        if not isinstance(max_workers, int) or max_workers < 1:
            raise ValueError(f"max_workers is {max_workers!r}. Should be a positive int.")
        if max_workers == 1:
            records = self.check_many(range(len(self.semigroups)))
        else:
            records = self.check_many_parallel(max_workers=max_workers)
        self.results = [records[i] for i in sorted(records)]
        self.dump_as_json(self.results)
        return self.results

    @property
    def passed(self) -> bool:
        return all(record["status"] in (PASS, SKIP) for record in self.results)

    def summary(self) -> dict:
        counts = {status: 0 for status in (PASS, FAIL, SKIP, CAP, BUG)}
        for record in self.results:
            counts[record["status"]] += 1
        return {"check": self.keyword, "total": len(self.results), **counts}

    def write_ndjson(self, stream) -> None:
        for record in self.results:
            stream.write(dumps_line(record) + "\n")

    def dump_as_json(self, results):
        if self.save_json:
            now = datetime.now().strftime("%Y%m%d-%H%M%S")
            fname = os.path.join(self.out_path, f"check_results_{self.keyword}_{now}.json")
            with open(fname, "w", encoding="utf-8") as f:
                f.write(dumps(results))
            logger.info(f"Dumping {self.keyword}-results as json file at {self.out_path}.")

    def into_DataFrame(self) -> pd.DataFrame:
        rows = []
        for record in self.results:
            row = {k: record[k] for k in ("index", "name", "order", "check", "status")}
            for key, value in record.get("result", {}).items():
                if isinstance(value, (bool, int, float, str)) or value is None:
                    row[key] = value
            row["ms"] = record["timing"]["ms"]
            rows.append(row)
        return pd.DataFrame(rows)
