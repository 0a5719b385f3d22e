#!/usr/bin/env python3
# Copyright 2026 The diba-sim Authors.
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

"""Reference answers for a .tbl directory, computed with sqlite.

Money is converted to integer hundredths before any arithmetic so results
are exact. Writes q3_golden.csv and q1_golden.csv into the directory;
with --tag T the names become q3_golden_T.csv and q1_golden_T.csv.
"""
import argparse
import datetime
import pathlib
import sqlite3

SCHEMAS = {
    "customer": ["c_custkey", "c_name", "c_address", "c_nationkey", "c_phone", "c_acctbal", "c_mktsegment",
                 "c_comment"],
    "orders": ["o_orderkey", "o_custkey", "o_orderstatus", "o_totalprice", "o_orderdate", "o_orderpriority",
               "o_clerk", "o_shippriority", "o_comment"],
    "lineitem": ["l_orderkey", "l_partkey", "l_suppkey", "l_linenumber", "l_quantity", "l_extendedprice",
                 "l_discount", "l_tax", "l_returnflag", "l_linestatus", "l_shipdate", "l_commitdate",
                 "l_receiptdate", "l_shipinstruct", "l_shipmode", "l_comment"],
}
CENTS = {"l_extendedprice", "l_discount", "l_tax", "l_quantity"}
INTS = {"c_custkey", "o_orderkey", "o_custkey", "o_shippriority", "l_orderkey"}


def hundredths(text):
    whole, _, frac = text.partition(".")
    sign = -1 if whole.startswith("-") else 1
    return sign * (abs(int(whole)) * 100 + int((frac + "00")[:2]))


def load(db, directory):
    for table, cols in SCHEMAS.items():
        db.execute(f"create table {table} ({', '.join(cols)})")
        rows = []
        for line in (directory / f"{table}.tbl").read_text().splitlines():
            values = line.split("|")[:-1]
            row = []
            for name, v in zip(cols, values):
                row.append(hundredths(v) if name in CENTS else int(v) if name in INTS else v)
            rows.append(row)
        db.executemany(f"insert into {table} values ({', '.join('?' * len(cols))})", rows)


def fixed(v, decimals):
    return f"{v // 10 ** decimals}.{v % 10 ** decimals:0{decimals}d}"


def half_up(num, den):
    return fixed((2 * num + den) // (2 * den), 2)


def q3(db, segment, date, limit):
    rows = db.execute(
        """select l_orderkey, sum(l_extendedprice * (100 - l_discount)) as revenue, o_orderdate, o_shippriority
           from customer, orders, lineitem
           where c_mktsegment = ? and c_custkey = o_custkey and l_orderkey = o_orderkey
             and o_orderdate < ? and l_shipdate > ?
           group by l_orderkey, o_orderdate, o_shippriority
           order by revenue desc, l_orderkey asc limit ?""", (segment, date, date, limit if limit > 0 else -1)).fetchall()
    out = ["l_orderkey,revenue,o_orderdate,o_shippriority"]
    out += [f"{k},{fixed(r, 4)},{d},{p}" for k, r, d, p in rows]
    return "\n".join(out) + "\n"


def q1(db, cutoff):
    rows = db.execute(
        """select l_returnflag, l_linestatus, sum(l_quantity) / 100, sum(l_extendedprice),
                  sum(l_extendedprice * (100 - l_discount)),
                  sum(l_extendedprice * (100 - l_discount) * (100 + l_tax)), sum(l_discount), count(*)
           from lineitem where l_shipdate <= ?
           group by l_returnflag, l_linestatus order by l_returnflag, l_linestatus""", (cutoff,)).fetchall()
    out = ["l_returnflag,l_linestatus,sum_qty,sum_base_price,sum_disc_price,sum_charge,avg_qty,avg_price,avg_disc,"
           "count_order"]
    for rf, ls, qty, base, disc_price, charge, disc, n in rows:
        out.append(",".join([rf, ls, str(qty), fixed(base, 2), fixed(disc_price, 4), fixed(charge, 6),
                             half_up(100 * qty, n), half_up(base, n), half_up(disc, n), str(n)]))
    return "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("dir", type=pathlib.Path)
    ap.add_argument("--segment", default="BUILDING")
    ap.add_argument("--date", default="1995-03-15")
    ap.add_argument("--limit", type=int, default=10)
    ap.add_argument("--q1-delta", type=int, default=90)
    ap.add_argument("--tag", default="")
    args = ap.parse_args()
    db = sqlite3.connect(":memory:")
    load(db, args.dir)
    cutoff = (datetime.date(1998, 12, 1) - datetime.timedelta(days=args.q1_delta)).isoformat()
    suffix = f"_{args.tag}" if args.tag else ""
    (args.dir / f"q3_golden{suffix}.csv").write_text(q3(db, args.segment, args.date, args.limit))
    (args.dir / f"q1_golden{suffix}.csv").write_text(q1(db, cutoff))


if __name__ == "__main__":
    main()
