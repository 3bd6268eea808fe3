"""Import the extension and check a handful of known values."""

import json

import okounkov


def main():
    assert "p2" in okounkov.toric_fixtures()

    body = json.loads(okounkov.toric_fixture_body("p2"))
    assert len(body["vertices"]) == 3
    assert okounkov.volume(okounkov.toric_fixture_body("p2")) == "1/2"

    model = json.dumps({"s": 2, "mode": "delpezzo-general"})
    h = json.dumps({"d": "1", "m": ["0", "0"]})
    assert okounkov.seshadri(model, h, [0], [1]) == "1"
    assert okounkov.nakayama(model, h, [0]) == "1"

    assert okounkov.xi(okounkov.toric_fixture_body("bl1"), [1], 2) == "1"
    assert okounkov.nagata(9, "3", ["1"] * 9)
    assert not okounkov.nagata(10, "3", ["1"] * 10)

    try:
        okounkov.nagata(9, "1/0", ["1"])
    except ValueError:
        pass
    else:
        raise AssertionError("zero denominator accepted")
    print("smoke test ok")


if __name__ == "__main__":
    main()
