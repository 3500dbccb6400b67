"""
Label table

Append-only store of recorded show events with byte-exact lookup.
"""

from typing import Dict, Iterator, List, Tuple

from figrelabel.domain.entities.geometry import Point
from figrelabel.domain.entities.label import LabelRecord

# When a string was shown more than once, the earliest record supplies the
# anchor. Derivation: the lookup procedure aloads the flat (string x y ...)
# list and walks it from the top of the stack, i.e. from the last triple
# back to the first, overwriting the remembered point on every match. The
# final overwrite comes from the first triple, so seq 0 wins.
FIRST_OCCURRENCE_WINS = True


class LabelTable:
    """Ordered label records plus a bytes -> [seq, ...] index."""

    def __init__(self):
        self._records: List[LabelRecord] = []
        self._by_bytes: Dict[bytes, List[int]] = {}
        self._frozen = False

    def append(self, raw: bytes, anchor: Point) -> int:
        """
        Record one show event

        Args:
            raw: string operand bytes
            anchor: device-space point

        Returns:
            the new record's sequence number
        """
        if self._frozen:
            raise RuntimeError("label table is frozen")
        seq = len(self._records)
        raw = bytes(raw)
        self._records.append(LabelRecord(raw, Point(float(anchor[0]), float(anchor[1])), seq))
        self._by_bytes.setdefault(raw, []).append(seq)
        return seq

    def freeze(self) -> "LabelTable":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def records(self) -> Tuple[LabelRecord, ...]:
        return tuple(self._records)

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[LabelRecord]:
        return iter(tuple(self._records))

    def matches(self, sought: bytes) -> List[LabelRecord]:
        """All records whose bytes equal sought, ascending seq."""
        return [self._records[seq] for seq in self._by_bytes.get(bytes(sought), ())]

    def find_label(self, sought: bytes, fallback: Point) -> Tuple[Point, bool]:
        """
        Look up the anchor for a label string

        Args:
            sought: label bytes, compared byte for byte
            fallback: returned untouched when nothing matches

        Returns:
            (anchor, found)
        """
        seqs = self._by_bytes.get(bytes(sought))
        if not seqs:
            return fallback, False
        chosen = seqs[0] if FIRST_OCCURRENCE_WINS else seqs[-1]
        return self._records[chosen].anchor, True

    def duplicates(self) -> Dict[bytes, List[LabelRecord]]:
        """Label strings recorded more than once."""
        return {
            raw: [self._records[seq] for seq in seqs]
            for raw, seqs in self._by_bytes.items()
            if len(seqs) > 1
        }

    def check_index(self) -> bool:
        """Rebuild the index from the records and compare."""
        rebuilt: Dict[bytes, List[int]] = {}
        for record in self._records:
            rebuilt.setdefault(record.raw, []).append(record.seq)
        return rebuilt == self._by_bytes and all(
            record.seq == position for position, record in enumerate(self._records)
        )


def find_label(table: LabelTable, sought: bytes, fallback: Point) -> Tuple[Point, bool]:
    return table.find_label(sought, fallback)
