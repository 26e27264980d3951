#!/usr/bin/env python3
"""Regenerates the recorded-transport fixtures under data/recordings/.

The request URLs and Accept header mirror what the enrich module sends, so
the keys (SHA-256 of url + "\\n" + accept) line up with RecordedTransport.
"""

import hashlib
import pathlib
import shutil
import urllib.parse

ROOT = pathlib.Path(__file__).resolve().parents[2] / "data" / "recordings"
ACCEPT = "application/n-triples, text/turtle;q=0.9"
GND = "https://d-nb.info/gnd/"
GNDO = "https://d-nb.info/standards/elementset/gnd#"

PEOPLE = [
    ("118755951", "Heinrichs, Heinrich Matthias", "1650", "Q1000001"),
    ("116213108", "Matthias, Andreas Heinrich", "1612", "Q1000002"),
    ("11851825X", "Meibom, Johann Heinrich", "1590", None),
]

WIKIDATA = ('PREFIX wdt: <http://www.wikidata.org/prop/direct/>\n'
            'CONSTRUCT { ?item ?p ?o }\n'
            'WHERE { ?item wdt:P227 "{gnd}" . ?item ?p ?o }\n')


def key(url):
    return hashlib.sha256((url + "\n" + ACCEPT).encode()).hexdigest()


def write(dirname, entries):
    d = ROOT / dirname
    shutil.rmtree(d, ignore_errors=True)
    d.mkdir(parents=True)
    index = []
    for url, status, body in entries:
        k = key(url)
        (d / f"{k}.body").write_text(body, encoding="utf-8")
        index.append(f"{k}\t{status}\t{url}\n")
    (d / "index.tsv").write_text("".join(sorted(index)), encoding="utf-8")


def dnb_body(number, name, born, _):
    s = f"<{GND}{number}>"
    return (f"{s} <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <{GNDO}DifferentiatedPerson> .\n"
            f"{s} <{GNDO}preferredNameForThePerson> \"{name}\" .\n"
            f"{s} <{GNDO}dateOfBirth> \"{born}\"^^<http://www.w3.org/2001/XMLSchema#gYear> .\n"
            f"{s} <{GNDO}gndIdentifier> \"{number}\" .\n")


def wikidata_body(number, name, born, qid):
    if qid is None:
        return ""
    s = f"<http://www.wikidata.org/entity/{qid}>"
    return (f"{s} <http://www.wikidata.org/prop/direct/P227> \"{number}\" .\n"
            f"{s} <http://www.w3.org/2000/01/rdf-schema#label> \"{name}\"@de .\n"
            f"{s} <http://www.wikidata.org/prop/direct/P569> \"{born}-01-01T00:00:00Z\"^^<http://www.w3.org/2001/XMLSchema#dateTime> .\n")


def dnb_url(number):
    return f"{GND}{number}/about/lds"


def wikidata_url(number):
    query = WIKIDATA.replace("{gnd}", number)
    return "https://query.wikidata.org/sparql?query=" + urllib.parse.quote(query, safe="-_.~")


write("dnb", [(dnb_url(p[0]), 200, dnb_body(*p)) for p in PEOPLE])

faulty = [(dnb_url(p[0]), 200, dnb_body(*p)) for p in PEOPLE]
faulty[1] = (faulty[1][0], 200, faulty[1][2].replace(" .\n", "\n", 1))
write("dnb_faulty", faulty)

write("wikidata", [(wikidata_url(p[0]), 200, wikidata_body(*p)) for p in PEOPLE])
