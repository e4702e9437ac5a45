#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
CEGIS实验室 程序入口
"""
import os
import sys

import config
from utils import logger


def main(argv=None) -> int:
    """
    程序主入口，返回退出码
    """
    logger.setup_logging(
        log_level=logger.LOG_LEVEL_INFO,
        log_dir=config.APP_LOG_DIR,
        log_file_prefix=config.APP_LOG_PREFIX,
        max_bytes=10*1024*1024,  # 10MB
        backup_count=5
    )

    try:
        # 清理过期日志文件
        logger.cleanup_logs(config.APP_LOG_DIR, days_to_keep=config.APP_LOG_RETENTION_DAYS)
    except Exception as e:
        print(f"清理日志文件失败: {str(e)}")

    logger.info("===== CEGIS实验室 启动 =====")
    logger.info(f"Python版本: {sys.version}")
    logger.info(f"工作目录: {os.getcwd()}")

    try:
        from cegis_lab import main as lab_main
        return lab_main(argv)
    except KeyboardInterrupt:
        logger.info("检测到键盘中断，程序正常退出")
        print("\n程序已被用户中断")
        return 1
    except Exception as e:
        logger.critical(f"程序异常退出: {str(e)}", exc_info=True)
        print(f"\n程序异常退出: {str(e)}")
        return 1
    finally:
        logger.info("===== CEGIS实验室 结束 =====")


if __name__ == "__main__":
    sys.exit(main())
