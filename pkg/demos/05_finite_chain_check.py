# Exact diagonalisation of small rings against the infinite chain
#
# The finite ring is built from Pauli strings, fully diagonalised, and reduced
# to one and two sites. Its values approach the infinite-chain formulas as the
# ring grows.

from xyentangle import ModelParams
from xyentangle.oracle import ChainSpec, oracle_report
from xyentangle.reduced import two_site_thermal
from xyentangle.measures import concurrence_x_state

for lam, temp in ((0.5, 0.0), (1.0, 0.0), (1.5, 0.5)):
    p = ModelParams.from_temperature(1, lam, temp)
    st = two_site_thermal(1, p)
    print(f"\nlambda = {lam}, T = {temp}")
    print(f"  {'N':>4} {'sz':>10} {'xx':>10} {'zz':>10} {'C(1)':>8}")
    for n in (6, 8, 10):
        o = oracle_report(ChainSpec(n, p), 1)[0]
        print(f"  {n:4d} {o.sz:10.6f} {o.xx:10.6f} {o.zz:10.6f} {o.concurrence:8.5f}")
    print(f"  {'inf':>4} {st.z:10.6f} {st.xx:10.6f} {st.zz:10.6f} "
          f"{concurrence_x_state(st):8.5f}")
