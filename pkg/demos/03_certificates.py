"""Analytic slice-diameter certificates and when they cannot be issued."""
import json

from normlab import Day, Lp, base, nakano_norm
from normlab.certificates import certify_no_ld2p, check_certificate, explain, thm43_symmetric_check

cert = certify_no_ld2p(Lp(2.0), base(1), dim=16)
for line in explain(cert):
    print(line)

# the JSON is self-checking: every inequality can be re-verified from it alone
data = json.loads(json.dumps(cert.to_dict()))
print("violations:", check_certificate(data))

# 1-symmetric norms only need the pair (e_1, e_2)
for spec in (Lp(1.5), Lp(4.0), Day()):
    c = thm43_symmetric_check(spec, dim=12)
    print(spec, "bound", c.diameter_bound)

# Nakano: the constant l collapses onto 1 and no certificate is possible
res = certify_no_ld2p(nakano_norm(), base(1), dim=500)
print(res.status, res.reason, "l - 1 =", res.details["l_minus_1"])
