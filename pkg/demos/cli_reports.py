"""
The command-line reports
========================

"""

import json

from absemigroup.cli import main

main(["analyze", "--a", "4", "--b", "9"])
main(["census", "--a", "4", "--b", "9", "--genus", "9", "--format", "csv"])
main(["delta", "--nu", "4", "--mu", "9", "--format", "json", "--out", "/tmp/delta.json"])
print(json.load(open("/tmp/delta.json"))["results"])
