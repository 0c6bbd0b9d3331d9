import os

import dotenv

dotenv.load_dotenv(".env")
dotenv.load_dotenv(".env.secret")

os.environ.setdefault("HARDY_SHARP_LOG_LEVEL", "INFO")
