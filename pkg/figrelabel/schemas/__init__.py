from figrelabel.schemas.cli import CliOptions
from figrelabel.schemas.listing import CheckRow, CheckStatus, ListingRow

__all__ = ["CheckRow", "CheckStatus", "CliOptions", "ListingRow"]
