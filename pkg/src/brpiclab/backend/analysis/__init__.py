"""brpiclab analysis module: A0, L0, the order of BrPic and its identification."""
