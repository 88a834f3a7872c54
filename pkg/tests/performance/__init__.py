"""性能测试包"""
