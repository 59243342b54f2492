"""
PrefixLab - 主程序入口
分层设计：基础设施层 -> 核心层 -> 服务层 -> 命令行层
"""
import sys
from pathlib import Path

from dotenv import load_dotenv

# 项目根目录 (python/main.py 的上一级)
project_root = Path(__file__).parent.parent

# 加载 .env 文件 (PREFIXLAB_CEILING 等)
load_dotenv(project_root / ".env")
sys.path.insert(0, str(Path(__file__).parent))

from cli.app import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
